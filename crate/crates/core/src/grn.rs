//! The odd cactus family `G_r^n`, its closed-form degrees, and the separation report.

use std::fmt::{self, Write as _};

use num_integer::Integer;

use crate::blocks::block_decomposition;
use crate::circuits::{max_circuit_degree, odd_cactus_optimum};
use crate::error::{Error, Result};
use crate::graph::{cycle_graph, Graph};
use crate::graver::{conformal_kernel_divisor, graver_completion};
use crate::limits::Limits;
use crate::primitivity::{grn_primitive_binomial, is_primitive_subgraph};
use crate::toric::incidence_configuration;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GrnParams {
    n: usize,
    r: usize,
}

impl GrnParams {
    /// `n` must be odd and at least 3.
    pub fn new(n: usize, r: usize) -> Result<Self> {
        if n < 3 || n.is_multiple_of(2) {
            return Err(Error::InvalidParams(format!("cycle length must be odd and at least 3, got {n}")));
        }
        Ok(GrnParams { n, r })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    fn require_r(&self) -> Result<()> {
        if self.r == 0 {
            return Err(Error::InvalidParams("r must be at least 1".into()));
        }
        Ok(())
    }
}

/// `G_0^n` is the cycle `c0.0 … c0.(n-1)`; step `s` attaches an `n`-cycle at every
/// degree-2 vertex of `G_{s-1}^n`, in lexicographic label order.
pub fn build_grn(p: GrnParams) -> Graph {
    let mut g = cycle_graph(p.n, "c0").expect("n is at least 3");
    for step in 1..=p.r {
        let mut targets: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.degree(v) == 2).collect();
        targets.sort_by(|&a, &b| g.label(a).cmp(g.label(b)));
        for v in targets {
            g.attach_cycle(v, p.n, step).expect("fresh labels per step");
        }
    }
    g
}

fn pow(base: u64, exp: usize) -> Result<u64> {
    u32::try_from(exp).ok().and_then(|e| base.checked_pow(e)).ok_or(Error::Overflow)
}

/// `((n-1)^r - 1)/(n-2)`, the number of cycles attached per root vertex.
fn geometric(p: GrnParams) -> Result<u64> {
    let n = p.n as u64;
    Ok((pow(n - 1, p.r)? - 1) / (n - 2))
}

fn mul(a: u64, b: u64) -> Result<u64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// `½(n + n²((n-1)^r - 1)/(n-2))`.
pub fn grn_graver_degree(p: GrnParams) -> Result<u64> {
    p.require_r()?;
    let n = p.n as u64;
    Ok((n + mul(n * n, geometric(p)?)?) / 2)
}

/// `n + (2r-1)(n-1)`.
pub fn grn_circuit_bound(p: GrnParams) -> Result<u64> {
    p.require_r()?;
    let (n, r) = (p.n as u64, p.r as u64);
    Ok(n + (2 * r - 1) * (n - 1))
}

/// `n(n-1)^r`.
pub fn grn_degree2_count(p: GrnParams) -> Result<u64> {
    mul(p.n as u64, pow(p.n as u64 - 1, p.r)?)
}

/// `n + n(n-1)((n-1)^r - 1)/(n-2)`.
pub fn grn_vertex_count(p: GrnParams) -> Result<u64> {
    let n = p.n as u64;
    Ok(n + mul(n * (n - 1), geometric(p)?)?)
}

/// `n + n²((n-1)^r - 1)/(n-2)`.
pub fn grn_edge_count(p: GrnParams) -> Result<u64> {
    let n = p.n as u64;
    Ok(n + mul(n * n, geometric(p)?)?)
}

/// `1 + n((n-1)^r - 1)/(n-2)`.
pub fn grn_block_count(p: GrnParams) -> Result<u64> {
    Ok(1 + mul(p.n as u64, geometric(p)?)?)
}

/// A nonnegative fraction in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Self {
        let g = num.gcd(&den).max(1);
        Ratio { num: num / g, den: den / g }
    }

    /// Rounded half up to three decimal places.
    pub fn decimal(&self) -> String {
        let (num, den) = (self.num as u128, self.den as u128);
        let thousandths = (2000 * num + den) / (2 * den);
        format!("{}.{:03}", thousandths / 1000, thousandths % 1000)
    }

    pub fn lt(&self, other: &Ratio) -> bool {
        (self.num as u128) * (other.den as u128) < (other.num as u128) * (self.den as u128)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportRow {
    pub r: usize,
    pub graver_degree: u64,
    pub t: u64,
    pub edges: usize,
    pub vertices: usize,
    pub deg2_count: usize,
    pub blocks: usize,
    pub max_block_distance: usize,
    /// Two blocks whose circuit attains `t`.
    pub witness: Option<(usize, usize)>,
    /// Which independent cross-checks ran for this row.
    pub enumeration_checked: bool,
    pub completion_checked: bool,
}

impl ReportRow {
    pub fn graver_over_t(&self) -> Ratio {
        Ratio::new(self.graver_degree, self.t)
    }

    pub fn graver_over_t_squared(&self) -> Ratio {
        Ratio::new(self.graver_degree, self.t * self.t)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationReport {
    pub n: usize,
    pub rows: Vec<ReportRow>,
}

pub const CSV_HEADER: &str = "r,graver_degree,t,edges,vertices,deg2_count,blocks,max_block_distance";

impl SeparationReport {
    pub fn to_csv(&self) -> String {
        let mut out = format!("{CSV_HEADER}\n");
        for row in &self.rows {
            writeln!(
                out,
                "{},{},{},{},{},{},{},{}",
                row.r,
                row.graver_degree,
                row.t,
                row.edges,
                row.vertices,
                row.deg2_count,
                row.blocks,
                row.max_block_distance
            )
            .unwrap();
        }
        out
    }

    pub fn to_table(&self) -> String {
        let header = [
            "r", "graver", "t", "edges", "vertices", "deg2", "blocks", "maxdist", "graver/t", "", "graver/t^2",
            "",
        ];
        let mut cells: Vec<Vec<String>> = vec![header.iter().map(|s| s.to_string()).collect()];
        for row in &self.rows {
            let (a, b) = (row.graver_over_t(), row.graver_over_t_squared());
            cells.push(vec![
                row.r.to_string(),
                row.graver_degree.to_string(),
                row.t.to_string(),
                row.edges.to_string(),
                row.vertices.to_string(),
                row.deg2_count.to_string(),
                row.blocks.to_string(),
                row.max_block_distance.to_string(),
                a.to_string(),
                a.decimal(),
                b.to_string(),
                b.decimal(),
            ]);
        }
        let widths: Vec<usize> =
            (0..header.len()).map(|j| cells.iter().map(|c| c[j].len()).max().unwrap_or(0)).collect();
        let mut out = format!("n = {}\n", self.n);
        for c in &cells {
            let line: Vec<String> = c.iter().zip(&widths).map(|(s, &w)| format!("{s:>w$}")).collect();
            writeln!(out, "{}", line.join("  ").trim_end()).unwrap();
        }
        out
    }

    /// Whether `graver/t` grows strictly from each row to the next.
    pub fn ratio_strictly_increasing(&self) -> bool {
        self.rows.windows(2).all(|w| w[0].graver_over_t().lt(&w[1].graver_over_t()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReportOptions {
    /// Rows up to this `r` also check `t` and primitivity by full circuit enumeration.
    pub verify_up_to: usize,
    /// Rows up to this `r` also check primitivity against the completion engine.
    pub completion_up_to: usize,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions { verify_up_to: 2, completion_up_to: 1 }
    }
}

fn check(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Verification(what()))
    }
}

/// One row per `r = 1 … r_max`, every closed form re-derived from the built graph.
pub fn separation_report(n: usize, r_max: usize, options: ReportOptions, limits: &Limits) -> Result<SeparationReport> {
    if r_max == 0 {
        return Err(Error::InvalidParams("r_max must be at least 1".into()));
    }
    GrnParams::new(n, 1)?;
    let rows = (1..=r_max).map(|r| report_row(n, r, options, limits)).collect::<Result<_>>()?;
    Ok(SeparationReport { n, rows })
}

fn report_row(n: usize, r: usize, options: ReportOptions, limits: &Limits) -> Result<ReportRow> {
    let p = GrnParams::new(n, r)?;
    let g = build_grn(p);
    let binomial = grn_primitive_binomial(n, r)?;
    let graver_degree = binomial.degree() as u64;
    let expected = grn_graver_degree(p)?;
    check(graver_degree == expected, || format!("r = {r}: walk degree {graver_degree}, formula {expected}"))?;

    let optimum = odd_cactus_optimum(&g)?;
    let t = optimum.degree as u64;
    let bound = grn_circuit_bound(p)?;
    check(t == bound, || format!("r = {r}: cactus optimum {t}, bound {bound}"))?;

    let verdict = is_primitive_subgraph(&g)?;
    check(verdict.primitive, || format!("r = {r}: not primitive ({})", verdict.reason))?;

    let enumeration_checked = r <= options.verify_up_to;
    if enumeration_checked {
        let full = max_circuit_degree(&g, limits)? as u64;
        check(full == t, || format!("r = {r}: enumeration gives t = {full}, cactus gives {t}"))?;
    }
    let completion_checked = r <= options.completion_up_to;
    if completion_checked {
        verify_primitive_by_lattice(&g, &binomial, limits)
            .map_err(|e| Error::Verification(format!("r = {r}: {e}")))?;
    }

    let d = block_decomposition(&g)?;
    let tree = d.block_tree();
    let deg2_count = (0..g.vertex_count()).filter(|&v| g.degree(v) == 2).count();
    check(deg2_count as u64 == grn_degree2_count(p)?, || format!("r = {r}: degree-2 count {deg2_count}"))?;
    Ok(ReportRow {
        r,
        graver_degree,
        t,
        edges: g.edge_count(),
        vertices: g.vertex_count(),
        deg2_count,
        blocks: d.blocks.len(),
        max_block_distance: tree.max_block_distance(),
        witness: optimum.witness,
        enumeration_checked,
        completion_checked,
    })
}

/// Confirms ⊑-minimality of `b` with the completion engine, or by exhaustive
/// search below `b` when completion hits its cap.
pub fn verify_primitive_by_lattice(g: &Graph, b: &crate::toric::Binomial, limits: &Limits) -> Result<()> {
    let a = incidence_configuration(g);
    match graver_completion(&a, limits) {
        Ok(set) => check(set.contains(b.vector()), || "binomial missing from the completion Graver set".into()),
        Err(Error::CapExceeded { .. }) => match conformal_kernel_divisor(b.vector(), &a, limits)? {
            None => Ok(()),
            Some(v) => Err(Error::Verification(format!("divisible by {v:?}"))),
        },
        Err(e) => Err(e),
    }
}
