//! The graded ring of sections of a moment graph.
//!
//! A degree-`d` class assigns to each vertex a homogeneous degree-`d`
//! polynomial (or zero) so that for every edge the difference of the two
//! endpoint values is divisible by the edge direction. Divisibility by a
//! linear form is linear in the coefficients: restrict the difference to
//! the hyperplane where the form vanishes and ask for zero. All solving is
//! exact over the rationals.
//!
//! Two independent routes compute dimensions. [`section_basis`] builds the
//! full constraint matrix for one degree and extracts a reduced nullspace
//! basis. [`hilbert`] instead constructs flow-up classes (one per vertex,
//! supported on the up-set of its base, with the product of downward
//! directions as base value); when all of them exist the dimension of every
//! degree is pinned exactly, from below because monomial multiples of
//! flow-up classes are linearly independent (evaluate at base vertices in a
//! linear extension; the base values are nonzero and multiplication by them
//! is injective), and from above because projecting degree-`d` sections
//! vertex by vertex along a linear extension has fibers inside cosets of
//! the degree-`d` part of the ideal generated by the product of downward
//! directions (pairwise non-proportional at each vertex for valid graphs).
//! Both bounds equal `sum_v C(d - downdeg(v) + k - 1, k - 1)`. When some
//! flow-up class fails to exist, [`hilbert`] falls back to matrix ranks
//! degree by degree.

use crate::linalg::{nullspace, solve_affine, AffineSolution, Mat};
use crate::momentgraph::MomentGraph;
use crate::polyring::{monomial_basis, monomial_count, LinearForm, Monomial, Polynomial, Rational};
use num::{One, Zero};
use std::collections::HashMap;

/// Errors from section-ring computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CohomologyError {
    #[error("graph fails validation: {0}")]
    InvalidGraph(String),
    #[error("malformed class: {0}")]
    MalformedClass(String),
    #[error("max degree {given} is below the top generator degree {required}")]
    DegreeTooSmall { required: usize, given: usize },
    #[error("no flow-up class exists at vertex '{vertex}' in degree {degree}")]
    Infeasible { vertex: String, degree: usize },
    #[error("{which} factor fails the divisibility relations on {count} edge(s)")]
    NotAClass { which: String, count: usize },
    #[error("class is not in the span of the generators in degree {degree}")]
    NotInSpan { degree: usize },
    #[error("expansion is not unique in degree {degree} (degenerate generators)")]
    AmbiguousExpansion { degree: usize },
}

/// A vertex-wise assignment of homogeneous polynomials of one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GKMClass {
    degree: usize,
    values: Vec<Polynomial>,
}

impl GKMClass {
    /// Build a class, checking shape: one value per vertex, each zero or
    /// homogeneous of `degree` in `rank` variables. Does not check the
    /// edge relations; see [`check_class`].
    pub fn new(
        g: &MomentGraph,
        degree: usize,
        values: Vec<Polynomial>,
    ) -> Result<Self, CohomologyError> {
        if values.len() != g.vertex_count() {
            return Err(CohomologyError::MalformedClass(format!(
                "{} values for {} vertices",
                values.len(),
                g.vertex_count()
            )));
        }
        for (v, p) in values.iter().enumerate() {
            if p.vars() != g.rank() {
                return Err(CohomologyError::MalformedClass(format!(
                    "value at '{}' uses {} variables, expected {}",
                    g.vertex_name(v),
                    p.vars(),
                    g.rank()
                )));
            }
            if !p.is_homogeneous(degree) {
                return Err(CohomologyError::MalformedClass(format!(
                    "value at '{}' is not homogeneous of degree {}",
                    g.vertex_name(v),
                    degree
                )));
            }
        }
        Ok(GKMClass { degree, values })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn values(&self) -> &[Polynomial] {
        &self.values
    }

    pub fn value(&self, v: usize) -> &Polynomial {
        &self.values[v]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|p| p.is_zero())
    }

    /// `(v1,v2,...)` with values in stored vertex order.
    pub fn tuple_string(&self) -> String {
        let parts: Vec<String> = self.values.iter().map(|p| p.to_string()).collect();
        format!("({})", parts.join(","))
    }
}

/// A flow-up class: zero below its base vertex, the product of the
/// downward directions at the base, minimal-degree extensions above.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowUpClass {
    /// Index of the base vertex.
    pub base: usize,
    /// Total number of free parameters encountered (and set to zero) while
    /// extending above the base. Zero on Palais-Smale graphs.
    pub ambiguity_dim: usize,
    pub class: GKMClass,
}

/// One flow-up class per vertex, in stored vertex order.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    pub generators: Vec<FlowUpClass>,
    /// `Some(description)` when the generator degree histogram disagrees
    /// with the Betti numbers from [`hilbert`]; `None` when consistent.
    pub betti_note: Option<String>,
}

/// Dimension data per degree, with the Betti deconvolution when it exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertData {
    /// `dims[d]` is the dimension of the degree-`d` section space,
    /// `0 <= d <= max_degree`.
    pub dims: Vec<usize>,
    /// `betti[n]` solving `dims[d] = sum_n betti[n] * C(d-n+k-1, k-1)`,
    /// trailing zeros trimmed; `None` when the deconvolution has a
    /// negative entry.
    pub betti: Option<Vec<usize>>,
    /// True when the dims are exactly those of a free module over the
    /// polynomial ring with the Betti vector as generator degrees.
    pub free: bool,
}

/// Structure constants of the product in the generator basis after
/// evaluating all variables at zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrdinaryTable {
    /// Degrees of the generators, in generator order.
    pub degrees: Vec<usize>,
    /// `table[i][j]` lists `(l, c)` with `g_i * g_j = sum c * g_l` after
    /// evaluation at zero; only nonzero `c` appear.
    pub table: Vec<Vec<Vec<(usize, Rational)>>>,
}

fn require_valid(g: &MomentGraph) -> Result<(), CohomologyError> {
    let report = g.validate();
    if report.is_valid() {
        Ok(())
    } else {
        Err(CohomologyError::InvalidGraph(report.failure_summary()))
    }
}

/// Degree-`d` monomials avoiding the pivot variable of `alpha` (the row
/// space of one edge constraint) and the restriction of every degree-`d`
/// basis monomial to the hyperplane `alpha = 0`.
fn restricted_basis(alpha: &LinearForm, d: usize) -> (Vec<Monomial>, Vec<Polynomial>) {
    let k = alpha.vars();
    let p = alpha.pivot();
    let sub = alpha.pivot_solution();
    let mut pows = Vec::with_capacity(d + 1);
    pows.push(Polynomial::one(k));
    for i in 1..=d {
        let next = &pows[i - 1] * &sub;
        pows.push(next);
    }
    let basis = monomial_basis(k, d);
    let row_monos: Vec<Monomial> = basis
        .iter()
        .filter(|m| m.exponents()[p] == 0)
        .cloned()
        .collect();
    let restricted = basis
        .iter()
        .map(|m| {
            let e = m.exponents()[p] as usize;
            let mut rest = m.exponents().to_vec();
            rest[p] = 0;
            pows[e].mul_term(&Monomial::new(rest), &Rational::one())
        })
        .collect();
    (row_monos, restricted)
}

/// Constraint matrix whose nullspace is the degree-`d` section space, in
/// coordinates (stored vertex order) x (descending graded-lex monomials).
fn section_matrix(g: &MomentGraph, d: usize) -> Mat {
    let k = g.rank();
    let m = monomial_count(k, d);
    let blocks: Vec<(Vec<Monomial>, Vec<Polynomial>)> = g
        .edges()
        .iter()
        .map(|e| restricted_basis(&e.direction, d))
        .collect();
    let total_rows: usize = blocks.iter().map(|(r, _)| r.len()).sum();
    let mut mat = Mat::zeros(total_rows, g.vertex_count() * m);
    let mut base_row = 0;
    for (e, (row_monos, restricted)) in g.edges().iter().zip(&blocks) {
        let lookup: HashMap<&Monomial, usize> =
            row_monos.iter().enumerate().map(|(i, mo)| (mo, i)).collect();
        for (j, rp) in restricted.iter().enumerate() {
            for (mono, c) in rp.terms() {
                let r = base_row + lookup[mono];
                *mat.at_mut(r, e.north * m + j) += c;
                *mat.at_mut(r, e.south * m + j) -= c;
            }
        }
        base_row += row_monos.len();
    }
    mat
}

/// Basis of the degree-`d` section space as (dimension, classes). The
/// classes are the reduced-echelon nullspace basis for the concatenated
/// coordinate order, so the result is deterministic.
pub fn section_basis(
    g: &MomentGraph,
    d: usize,
) -> Result<(usize, Vec<GKMClass>), CohomologyError> {
    require_valid(g)?;
    let k = g.rank();
    let m = monomial_count(k, d);
    let monos = monomial_basis(k, d);
    let vectors = nullspace(section_matrix(g, d));
    let mut classes = Vec::with_capacity(vectors.len());
    for vec in &vectors {
        let values = (0..g.vertex_count())
            .map(|v| {
                Polynomial::from_terms(
                    k,
                    monos
                        .iter()
                        .enumerate()
                        .map(|(j, mo)| (mo.clone(), vec[v * m + j].clone())),
                )
            })
            .collect();
        classes.push(GKMClass::new(g, d, values)?);
    }
    Ok((classes.len(), classes))
}

/// Check the edge relations for `c`. Returns whether all hold together
/// with the indices of the violated edges.
pub fn check_class(
    g: &MomentGraph,
    c: &GKMClass,
) -> Result<(bool, Vec<usize>), CohomologyError> {
    require_valid(g)?;
    if c.values.len() != g.vertex_count() {
        return Err(CohomologyError::MalformedClass(format!(
            "{} values for {} vertices",
            c.values.len(),
            g.vertex_count()
        )));
    }
    let mut violations = Vec::new();
    for (i, e) in g.edges().iter().enumerate() {
        let diff = &c.values[e.north] - &c.values[e.south];
        if !diff.divisible_by(&e.direction) {
            violations.push(i);
        }
    }
    Ok((violations.is_empty(), violations))
}

/// The flow-up class based at vertex `v`: degree equals the down-degree of
/// `v`, the value at `v` is the product of the downward directions, values
/// vanish outside the up-set of `v`, and the remaining vertices are filled
/// in along a linear extension by solving the edge constraints, pinning
/// any free parameters to zero (their total is reported as
/// `ambiguity_dim`). Fails when some vertex admits no value of this
/// degree.
pub fn flow_up_generator(g: &MomentGraph, v: usize) -> Result<FlowUpClass, CohomologyError> {
    require_valid(g)?;
    assert!(v < g.vertex_count(), "vertex index out of range");
    let k = g.rank();
    let d = g.down_degree(v);
    let order = g
        .linear_extension()
        .map_err(|e| CohomologyError::InvalidGraph(e.to_string()))?;
    let up = g.up_set(v);
    let mut values = vec![Polynomial::zero(k); g.vertex_count()];
    let mut base = Polynomial::one(k);
    for (_, e) in g.in_edges(v) {
        base = &base * &e.direction.to_polynomial();
    }
    values[v] = base;
    let basis = monomial_basis(k, d);
    let m = basis.len();
    let mut ambiguity = 0usize;
    for &w in &order {
        if w == v || !up.contains(&w) {
            continue;
        }
        let in_edges: Vec<usize> = g.in_edges(w).map(|(i, _)| i).collect();
        let blocks: Vec<(Vec<Monomial>, Vec<Polynomial>)> = in_edges
            .iter()
            .map(|&i| restricted_basis(&g.edges()[i].direction, d))
            .collect();
        let total_rows: usize = blocks.iter().map(|(r, _)| r.len()).sum();
        let mut mat = Mat::zeros(total_rows, m);
        let mut rhs = vec![Rational::zero(); total_rows];
        let mut base_row = 0;
        for (&ei, (row_monos, restricted)) in in_edges.iter().zip(&blocks) {
            let edge = &g.edges()[ei];
            let lookup: HashMap<&Monomial, usize> =
                row_monos.iter().enumerate().map(|(i, mo)| (mo, i)).collect();
            for (j, rp) in restricted.iter().enumerate() {
                for (mono, c) in rp.terms() {
                    *mat.at_mut(base_row + lookup[mono], j) += c;
                }
            }
            let rv = values[edge.south].restrict_to_hyperplane(&edge.direction);
            for (mono, c) in rv.terms() {
                rhs[base_row + lookup[mono]] += c;
            }
            base_row += row_monos.len();
        }
        match solve_affine(mat, &rhs) {
            AffineSolution::Infeasible => {
                return Err(CohomologyError::Infeasible {
                    vertex: g.vertex_name(w).to_string(),
                    degree: d,
                })
            }
            AffineSolution::Solved { x, free_count } => {
                ambiguity += free_count;
                values[w] = Polynomial::from_terms(
                    k,
                    basis.iter().enumerate().map(|(j, mo)| (mo.clone(), x[j].clone())),
                );
            }
        }
    }
    let class = GKMClass::new(g, d, values)?;
    debug_assert!(check_class(g, &class).map(|(ok, _)| ok).unwrap_or(false));
    Ok(FlowUpClass { base: v, ambiguity_dim: ambiguity, class })
}

fn try_all_flowups(g: &MomentGraph) -> Result<Vec<FlowUpClass>, CohomologyError> {
    (0..g.vertex_count()).map(|v| flow_up_generator(g, v)).collect()
}

fn closed_form_dim(g: &MomentGraph, d: usize) -> usize {
    let k = g.rank();
    g.down_degrees()
        .into_iter()
        .filter(|&dd| dd <= d)
        .map(|dd| monomial_count(k, d - dd))
        .sum()
}

/// Dimensions of the section spaces for degrees `0..=max_degree`, the
/// Betti deconvolution, and a freeness diagnostic. `max_degree` must reach
/// the largest down-degree so every generator degree is visible.
pub fn hilbert(g: &MomentGraph, max_degree: usize) -> Result<HilbertData, CohomologyError> {
    require_valid(g)?;
    let maxdd = g.max_down_degree();
    if max_degree < maxdd {
        return Err(CohomologyError::DegreeTooSmall { required: maxdd, given: max_degree });
    }
    let k = g.rank();
    let dims: Vec<usize> = if try_all_flowups(g).is_ok() {
        (0..=max_degree).map(|d| closed_form_dim(g, d)).collect()
    } else {
        (0..=max_degree)
            .map(|d| {
                let cols = g.vertex_count() * monomial_count(k, d);
                cols - section_matrix(g, d).rank()
            })
            .collect()
    };
    // deconvolve against the Hilbert series of the polynomial ring:
    // betti[n] = sum_j (-1)^j C(k, j) dims[n - j]
    let mut betti_full: Vec<i64> = Vec::with_capacity(dims.len());
    let mut negative = false;
    for n in 0..dims.len() {
        let mut b: i64 = 0;
        for j in 0..=k.min(n) {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            b += sign * (crate::polyring::binomial(k, j) as i64) * dims[n - j] as i64;
        }
        if b < 0 {
            negative = true;
        }
        betti_full.push(b);
    }
    let betti = if negative {
        None
    } else {
        let mut v: Vec<usize> = betti_full.iter().map(|&b| b as usize).collect();
        while v.last() == Some(&0) {
            v.pop();
        }
        Some(v)
    };
    let free = match &betti {
        None => false,
        Some(b) => (0..dims.len()).all(|d| {
            let recon: usize = b
                .iter()
                .enumerate()
                .filter(|&(n, _)| n <= d)
                .map(|(n, &bn)| bn * monomial_count(k, d - n))
                .sum();
            recon == dims[d]
        }),
    };
    Ok(HilbertData { dims, betti, free })
}

/// Flow-up classes at every vertex, in stored vertex order, cross-checked
/// against the Betti numbers. A disagreement between the generator degree
/// histogram and the Betti deconvolution is reported in `betti_note`
/// rather than silently dropped.
pub fn all_generators(g: &MomentGraph) -> Result<GeneratorSet, CohomologyError> {
    require_valid(g)?;
    let generators = try_all_flowups(g)?;
    let maxdd = g.max_down_degree();
    let h = hilbert(g, maxdd + 2)?;
    let mut hist = vec![0usize; maxdd + 1];
    for fu in &generators {
        hist[fu.class.degree()] += 1;
    }
    while hist.last() == Some(&0) {
        hist.pop();
    }
    let betti_note = match &h.betti {
        Some(b) if *b == hist => None,
        Some(b) => Some(format!(
            "generator degree histogram {:?} disagrees with Betti numbers {:?}",
            hist, b
        )),
        None => Some("Betti deconvolution has negative entries".to_string()),
    };
    Ok(GeneratorSet { generators, betti_note })
}

/// Vertex-wise product. Both factors must satisfy the edge relations.
pub fn multiply(
    g: &MomentGraph,
    a: &GKMClass,
    b: &GKMClass,
) -> Result<GKMClass, CohomologyError> {
    require_valid(g)?;
    for (c, which) in [(a, "first"), (b, "second")] {
        let (ok, violations) = check_class(g, c)?;
        if !ok {
            return Err(CohomologyError::NotAClass {
                which: which.to_string(),
                count: violations.len(),
            });
        }
    }
    let values = a
        .values
        .iter()
        .zip(&b.values)
        .map(|(x, y)| x * y)
        .collect();
    GKMClass::new(g, a.degree + b.degree, values)
}

/// Write `c` as `sum_i q_i * gens[i]` with polynomial coefficients
/// `q_i` homogeneous of degree `deg(c) - deg(gens[i])`. Errors when no
/// exact combination exists or when it is not unique.
pub fn expand(
    g: &MomentGraph,
    gens: &[FlowUpClass],
    c: &GKMClass,
) -> Result<Vec<Polynomial>, CohomologyError> {
    require_valid(g)?;
    let k = g.rank();
    let d = c.degree();
    let m = monomial_count(k, d);
    let target_monos = monomial_basis(k, d);
    let lookup: HashMap<&Monomial, usize> = target_monos
        .iter()
        .enumerate()
        .map(|(i, mo)| (mo, i))
        .collect();
    // one block of unknowns per generator of degree <= d
    let mut blocks: Vec<(usize, Vec<Monomial>)> = Vec::new(); // (gen index, coefficient basis)
    let mut cols = 0;
    for (i, fu) in gens.iter().enumerate() {
        let gd = fu.class.degree();
        if gd > d {
            continue;
        }
        let cb = monomial_basis(k, d - gd);
        cols += cb.len();
        blocks.push((i, cb));
    }
    let rows = g.vertex_count() * m;
    let mut mat = Mat::zeros(rows, cols);
    let mut col = 0;
    for (i, cb) in &blocks {
        for nu in cb {
            for v in 0..g.vertex_count() {
                let prod = gens[*i].class.value(v).mul_term(nu, &Rational::one());
                for (mono, coeff) in prod.terms() {
                    *mat.at_mut(v * m + lookup[mono], col) += coeff;
                }
            }
            col += 1;
        }
    }
    let mut rhs = vec![Rational::zero(); rows];
    for v in 0..g.vertex_count() {
        for (mono, coeff) in c.value(v).terms() {
            rhs[v * m + lookup[mono]] += coeff;
        }
    }
    match solve_affine(mat, &rhs) {
        AffineSolution::Infeasible => Err(CohomologyError::NotInSpan { degree: d }),
        AffineSolution::Solved { free_count, .. } if free_count > 0 => {
            Err(CohomologyError::AmbiguousExpansion { degree: d })
        }
        AffineSolution::Solved { x, .. } => {
            let mut out = vec![Polynomial::zero(k); gens.len()];
            let mut col = 0;
            for (i, cb) in &blocks {
                out[*i] = Polynomial::from_terms(
                    k,
                    cb.iter().map(|nu| {
                        let term = (nu.clone(), x[col].clone());
                        col += 1;
                        term
                    }),
                );
            }
            Ok(out)
        }
    }
}

/// Structure constants of the generator basis after evaluating the
/// variables at zero: the multiplication table of the ordinary (that is,
/// non-equivariant) cohomology in the images of the generators.
pub fn ordinary_table(
    g: &MomentGraph,
    gens: &GeneratorSet,
) -> Result<OrdinaryTable, CohomologyError> {
    require_valid(g)?;
    let gs = &gens.generators;
    let n = gs.len();
    let degrees: Vec<usize> = gs.iter().map(|fu| fu.class.degree()).collect();
    let mut table = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in i..n {
            let prod = multiply(g, &gs[i].class, &gs[j].class)?;
            let coeffs = expand(g, gs, &prod)?;
            let entries: Vec<(usize, Rational)> = coeffs
                .iter()
                .enumerate()
                .filter_map(|(l, p)| {
                    let c = p.eval_at_zero();
                    if c.is_zero() {
                        None
                    } else {
                        Some((l, c))
                    }
                })
                .collect();
            table[i][j] = entries.clone();
            table[j][i] = entries;
        }
    }
    Ok(OrdinaryTable { degrees, table })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;
    use crate::momentgraph::{Edge, Vertex};
    use crate::polyring::rat;

    fn form(coeffs: &[i64]) -> LinearForm {
        LinearForm::new(coeffs.iter().map(|&c| rat(c)).collect()).unwrap()
    }

    fn poly(g: &MomentGraph, text: &str) -> Polynomial {
        crate::dslio::parse_polynomial(text, g.rank()).unwrap()
    }

    fn class(g: &MomentGraph, degree: usize, texts: &[&str]) -> GKMClass {
        let values = texts.iter().map(|t| poly(g, t)).collect();
        GKMClass::new(g, degree, values).unwrap()
    }

    #[test]
    fn degree_zero_sections_of_cp1() {
        let g = builtins::cp1();
        let (dim, basis) = section_basis(&g, 0).unwrap();
        assert_eq!(dim, 1);
        assert_eq!(basis[0], class(&g, 0, &["1", "1"]));
    }

    #[test]
    fn check_class_reports_the_violated_edge() {
        let g = builtins::cpn(2).unwrap();
        let c = class(&g, 1, &["0", "t1", "t1"]);
        let (ok, violations) = check_class(&g, &c).unwrap();
        assert!(!ok);
        // edges are stored p1p2, p1p3, p2p3; t1 - 0 is not divisible by t2
        assert_eq!(violations, vec![1]);
        assert_eq!(g.edge_label(1), "p1 -> p3");
    }

    #[test]
    fn flow_up_at_the_middle_of_cpn2() {
        let g = builtins::cpn(2).unwrap();
        let fu = flow_up_generator(&g, 1).unwrap();
        assert_eq!(fu.class, class(&g, 1, &["0", "t1", "t2"]));
        assert_eq!(fu.ambiguity_dim, 0);
    }

    #[test]
    fn hilbert_of_cp1() {
        let g = builtins::cp1();
        let h = hilbert(&g, 4).unwrap();
        assert_eq!(h.dims, vec![1, 2, 2, 2, 2]);
        assert_eq!(h.betti, Some(vec![1, 1]));
        assert!(h.free);
    }

    #[test]
    fn infeasible_graph_falls_back_to_ranks() {
        // two sources joined to one sink cannot carry a degree-0 flow-up
        // class at either source
        let g = MomentGraph::new(
            2,
            vec![Vertex::new("a"), Vertex::new("b"), Vertex::new("w")],
            vec![
                Edge { south: 0, north: 2, direction: form(&[1, 0]) },
                Edge { south: 1, north: 2, direction: form(&[0, 1]) },
            ],
            None,
        )
        .unwrap();
        assert!(matches!(
            flow_up_generator(&g, 0),
            Err(CohomologyError::Infeasible { degree: 0, .. })
        ));
        let h = hilbert(&g, 3).unwrap();
        assert_eq!(h.dims[0], 1, "degree-0 sections are the constants");
        assert_eq!(section_basis(&g, 0).unwrap().0, 1);
        assert!(matches!(
            all_generators(&g),
            Err(CohomologyError::Infeasible { .. })
        ));
    }

    #[test]
    fn hilbert_rejects_short_ranges() {
        let g = builtins::paper_quadric();
        assert!(matches!(
            hilbert(&g, 3),
            Err(CohomologyError::DegreeTooSmall { required: 4, given: 3 })
        ));
    }

    #[test]
    fn invalid_graphs_are_refused() {
        let g = MomentGraph::new(
            1,
            vec![Vertex::new("a"), Vertex::new("a")],
            vec![],
            None,
        )
        .unwrap();
        assert!(matches!(
            section_basis(&g, 0),
            Err(CohomologyError::InvalidGraph(_))
        ));
    }
}
