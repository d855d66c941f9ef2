//! Ready-made moment graphs.
//!
//! Families:
//! - [`cpn`]: complex projective space `CP^n` under the standard torus,
//!   a complete graph on `n + 1` fixed points.
//! - [`flag`]: the full flag variety graph on the permutations of
//!   `{1..n}`, edges given by transpositions.
//! - [`grassmannian`]: k-subsets of `{1..n}`, edges swapping one element.
//! - [`paper_flag3`]: a rank-2 presentation of the three-dimensional flag
//!   manifold as a hexagon with three long diagonals.
//! - [`paper_quadric`]: the four-dimensional quadric, an octahedron graph
//!   on six vertices with rank 3.
//! - [`paper_hessenberg`]: the hexagon without its diagonals, a regular
//!   semisimple Hessenberg example that fails the Palais-Smale condition.

use crate::momentgraph::{Edge, GraphError, MomentGraph, Vertex};
use crate::polyring::{rat, LinearForm, Rational};
use itertools::Itertools;
use num::{One, Zero};
use std::collections::HashMap;

fn form(coeffs: &[i64]) -> LinearForm {
    LinearForm::new(coeffs.iter().map(|&c| rat(c)).collect()).expect("nonzero form")
}

/// `CP^1`: two fixed points joined by a single `t1` edge. Same graph as
/// `cpn(1)`.
pub fn cp1() -> MomentGraph {
    cpn(1).expect("cpn(1) is well-formed")
}

/// `CP^n` with the rank-`n` torus action. Vertices `p1 .. p(n+1)` sit at
/// the origin and the standard basis vectors; the edge `pi -> pj` (for
/// `i < j`) carries `t(j-1) - t(i-1)`, reading `t0 = 0`. The stored
/// direction vector is `(1, 2, .., n)`.
pub fn cpn(n: usize) -> Result<MomentGraph, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidParameter(
            "cpn requires n >= 1".into(),
        ));
    }
    let rank = n;
    let mut vertices = Vec::with_capacity(n + 1);
    for i in 1..=(n + 1) {
        let mut pos = vec![Rational::zero(); rank];
        if i >= 2 {
            pos[i - 2] = Rational::one();
        }
        vertices.push(Vertex::at(format!("p{}", i), pos));
    }
    let mut edges = Vec::new();
    for i in 1..=(n + 1) {
        for j in (i + 1)..=(n + 1) {
            let mut coeffs = vec![Rational::zero(); rank];
            coeffs[j - 2] = Rational::one();
            if i >= 2 {
                coeffs[i - 2] = -Rational::one();
            }
            edges.push(Edge {
                south: i - 1,
                north: j - 1,
                direction: LinearForm::new(coeffs).expect("nonzero"),
            });
        }
    }
    let xi = (1..=n).map(|i| rat(i as i64)).collect();
    MomentGraph::new(rank, vertices, edges, Some(xi))
}

fn inversions(w: &[usize]) -> usize {
    let mut count = 0;
    for p in 0..w.len() {
        for q in (p + 1)..w.len() {
            if w[p] > w[q] {
                count += 1;
            }
        }
    }
    count
}

fn perm_name(w: &[usize]) -> String {
    if w.len() <= 9 {
        w.iter().map(|d| d.to_string()).collect()
    } else {
        w.iter().map(|d| d.to_string()).join(".")
    }
}

/// The complete flag variety graph for `GL(n)`: vertices are the
/// permutations of `{1..n}` in one-line notation (named by their digit
/// strings, dot-separated once `n > 9`), ordered by (inversion count,
/// lexicographic). Swapping the values `i < j` inside a permutation gives
/// an edge labeled `ti - tj`, oriented toward more inversions. A vertex is
/// placed at its inverse permutation, and the stored direction vector is
/// `(n, n-1, .., 1)`, so the orientation points up along it. Every vertex
/// meets `n(n-1)/2` edges.
pub fn flag(n: usize) -> Result<MomentGraph, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidParameter(
            "flag requires n >= 1".into(),
        ));
    }
    let rank = n;
    let mut perms: Vec<Vec<usize>> = (1..=n).permutations(n).collect();
    perms.sort_by_key(|w| (inversions(w), w.clone()));
    let index: HashMap<&[usize], usize> = perms
        .iter()
        .enumerate()
        .map(|(i, w)| (w.as_slice(), i))
        .collect();
    let mut vertices = Vec::with_capacity(perms.len());
    for w in &perms {
        let mut inv = vec![Rational::zero(); n];
        for (p, &val) in w.iter().enumerate() {
            inv[val - 1] = rat((p + 1) as i64);
        }
        vertices.push(Vertex::at(perm_name(w), inv));
    }
    let mut edges = Vec::new();
    for (vi, w) in perms.iter().enumerate() {
        for i in 1..=n {
            for j in (i + 1)..=n {
                let pi = w.iter().position(|&v| v == i).unwrap();
                let pj = w.iter().position(|&v| v == j).unwrap();
                if pi < pj {
                    let mut w2 = w.clone();
                    w2.swap(pi, pj);
                    let mut coeffs = vec![Rational::zero(); rank];
                    coeffs[i - 1] = Rational::one();
                    coeffs[j - 1] = -Rational::one();
                    edges.push(Edge {
                        south: vi,
                        north: index[w2.as_slice()],
                        direction: LinearForm::new(coeffs).expect("nonzero"),
                    });
                }
            }
        }
    }
    let xi = (1..=n).rev().map(|i| rat(i as i64)).collect();
    MomentGraph::new(rank, vertices, edges, Some(xi))
}

fn subset_name(s: &[usize]) -> String {
    if s.iter().all(|&x| x <= 9) {
        s.iter().map(|d| d.to_string()).collect()
    } else {
        s.iter().map(|d| d.to_string()).join(".")
    }
}

/// The Grassmannian graph `Gr(k, n)`: vertices are the k-element subsets
/// of `{1..n}` (named by their sorted elements), ordered by (element sum,
/// lexicographic) and placed at their indicator vectors. Exchanging
/// `i` in the subset for `j` outside it with `j > i` gives an edge labeled
/// `tj - ti`. The stored direction vector is `(1, 2, .., n)`.
pub fn grassmannian(k: usize, n: usize) -> Result<MomentGraph, GraphError> {
    if k == 0 || k >= n {
        return Err(GraphError::InvalidParameter(
            "grassmannian requires 1 <= k < n".into(),
        ));
    }
    let rank = n;
    let mut subsets: Vec<Vec<usize>> = (1..=n).combinations(k).collect();
    subsets.sort_by_key(|s| (s.iter().sum::<usize>(), s.clone()));
    let index: HashMap<&[usize], usize> = subsets
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_slice(), i))
        .collect();
    let mut vertices = Vec::with_capacity(subsets.len());
    for s in &subsets {
        let mut pos = vec![Rational::zero(); rank];
        for &i in s {
            pos[i - 1] = Rational::one();
        }
        vertices.push(Vertex::at(subset_name(s), pos));
    }
    let mut edges = Vec::new();
    for (si, s) in subsets.iter().enumerate() {
        for &i in s {
            for j in (i + 1)..=n {
                if s.contains(&j) {
                    continue;
                }
                let mut t: Vec<usize> = s.iter().copied().filter(|&x| x != i).collect();
                t.push(j);
                t.sort_unstable();
                let mut coeffs = vec![Rational::zero(); rank];
                coeffs[j - 1] = Rational::one();
                coeffs[i - 1] = -Rational::one();
                edges.push(Edge {
                    south: si,
                    north: index[t.as_slice()],
                    direction: LinearForm::new(coeffs).expect("nonzero"),
                });
            }
        }
    }
    let xi = (1..=n).map(|i| rat(i as i64)).collect();
    MomentGraph::new(rank, vertices, edges, Some(xi))
}

/// The three-dimensional full flag manifold drawn as a hexagon with its
/// three long diagonals, using a rank-2 torus. Down-degrees run 0,1,1,2,2,3
/// from bottom to top. The direction labels are pinned by the usual choice
/// of simple roots; no consistent vertex placement exists for these exact
/// label signs, so the graph carries no positions and no direction vector.
pub fn paper_flag3() -> MomentGraph {
    let names = [
        "bottom",
        "lower-left",
        "lower-right",
        "upper-left",
        "upper-right",
        "top",
    ];
    let vertices: Vec<Vertex> = names.iter().map(|n| Vertex::new(*n)).collect();
    let e = |s: usize, n: usize, c: &[i64]| Edge { south: s, north: n, direction: form(c) };
    let edges = vec![
        e(0, 1, &[1, 0]),  // bottom -> lower-left: t1
        e(0, 2, &[0, 1]),  // bottom -> lower-right: t2
        e(0, 5, &[1, -1]), // bottom -> top: t1-t2
        e(1, 3, &[1, -1]), // lower-left -> upper-left: t1-t2
        e(2, 4, &[1, -1]), // lower-right -> upper-right: t1-t2
        e(1, 4, &[0, 1]),  // lower-left -> upper-right: t2
        e(2, 3, &[1, 0]),  // lower-right -> upper-left: t1
        e(3, 5, &[0, 1]),  // upper-left -> top: t2
        e(4, 5, &[1, 0]),  // upper-right -> top: t1
    ];
    MomentGraph::new(2, vertices, edges, None).expect("well-formed")
}

/// The hexagon of [`paper_flag3`] without its three diagonals: the moment
/// graph of a regular semisimple Hessenberg variety. Down-degrees are
/// 0,1,1,1,1,2, so the two middle edges do not raise the down-degree and
/// the Palais-Smale check fails; flow-up classes at the middle vertices
/// are not unique.
pub fn paper_hessenberg() -> MomentGraph {
    let names = [
        "bottom",
        "lower-left",
        "lower-right",
        "upper-left",
        "upper-right",
        "top",
    ];
    let vertices: Vec<Vertex> = names.iter().map(|n| Vertex::new(*n)).collect();
    let e = |s: usize, n: usize, c: &[i64]| Edge { south: s, north: n, direction: form(c) };
    let edges = vec![
        e(0, 1, &[1, 0]),  // bottom -> lower-left: t1
        e(0, 2, &[0, 1]),  // bottom -> lower-right: t2
        e(1, 3, &[1, -1]), // lower-left -> upper-left: t1-t2
        e(2, 4, &[1, -1]), // lower-right -> upper-right: t1-t2
        e(3, 5, &[0, 1]),  // upper-left -> top: t2
        e(4, 5, &[1, 0]),  // upper-right -> top: t1
    ];
    MomentGraph::new(2, vertices, edges, None).expect("well-formed")
}

/// The four-dimensional smooth quadric under a rank-3 torus: an octahedron
/// with vertices `x1, x2, x3` and their antipodes `y1, y2, y3`, every pair
/// joined except the antipodal ones.
///
/// The labels are derived from the vertex positions rather than copied
/// from a table: every edge direction is exactly the position of its head
/// minus the position of its tail, which fixes the sign of each label
/// once the orientation is chosen (so `x2 -> y3` carries `-t1`, not
/// `t1`). Opposite edges of the octahedron are parallel and share their
/// direction. The orientation itself comes from the stored covector
/// `(-2, 2, 1)`, which pairs positively with every direction as listed
/// and orders the vertices x1, x2, x3, y3, y2, y1 with down-degrees
/// 0, 1, 2, 2, 3, 4. Reorienting by any other generic covector, for
/// example with [`MomentGraph::orient_from_xi`], permutes the vertices
/// but reproduces the same down-degree multiset.
pub fn paper_quadric() -> MomentGraph {
    let pos = |a: i64, b: i64, c: i64| vec![rat(a), rat(b), rat(c)];
    let vertices = vec![
        Vertex::at("x1", pos(0, 0, 0)),
        Vertex::at("x2", pos(0, 0, 1)),
        Vertex::at("x3", pos(0, 1, 0)),
        Vertex::at("y3", pos(-1, 0, 1)),
        Vertex::at("y2", pos(-1, 1, 0)),
        Vertex::at("y1", pos(-1, 1, 1)),
    ];
    let e = |s: usize, n: usize, c: &[i64]| Edge { south: s, north: n, direction: form(c) };
    let edges = vec![
        e(0, 1, &[0, 0, 1]),  // x1 -> x2: t3
        e(0, 2, &[0, 1, 0]),  // x1 -> x3: t2
        e(0, 3, &[-1, 0, 1]), // x1 -> y3: t3-t1
        e(0, 4, &[-1, 1, 0]), // x1 -> y2: t2-t1
        e(1, 2, &[0, 1, -1]), // x2 -> x3: t2-t3
        e(1, 3, &[-1, 0, 0]), // x2 -> y3: -t1
        e(1, 5, &[-1, 1, 0]), // x2 -> y1: t2-t1
        e(2, 4, &[-1, 0, 0]), // x3 -> y2: -t1
        e(2, 5, &[-1, 0, 1]), // x3 -> y1: t3-t1
        e(3, 4, &[0, 1, -1]), // y3 -> y2: t2-t3
        e(3, 5, &[0, 1, 0]),  // y3 -> y1: t2
        e(4, 5, &[0, 0, 1]),  // y2 -> y1: t3
    ];
    MomentGraph::new(3, vertices, edges, Some(vec![rat(-2), rat(2), rat(1)]))
        .expect("well-formed")
}

/// Builtin names and their parameter hints, for help output.
pub fn catalog() -> &'static [(&'static str, &'static str)] {
    &[
        ("cp1", ""),
        ("cpn", "--n N (N >= 1)"),
        ("flag", "--n N (N >= 1)"),
        ("grassmannian", "--k K --n N (1 <= K < N)"),
        ("paper-flag3", ""),
        ("paper-hessenberg", ""),
        ("paper-quadric", ""),
    ]
}

/// Look up a builtin by name with optional size parameters.
pub fn by_name(name: &str, n: Option<usize>, k: Option<usize>) -> Result<MomentGraph, GraphError> {
    let no_params = |g: MomentGraph| {
        if n.is_some() || k.is_some() {
            Err(GraphError::InvalidParameter(format!(
                "builtin '{}' takes no --n or --k",
                name
            )))
        } else {
            Ok(g)
        }
    };
    match name {
        "cp1" => no_params(cp1()),
        "cpn" => {
            if k.is_some() {
                return Err(GraphError::InvalidParameter("cpn takes only --n".into()));
            }
            cpn(n.ok_or_else(|| GraphError::InvalidParameter("cpn requires --n".into()))?)
        }
        "flag" => {
            if k.is_some() {
                return Err(GraphError::InvalidParameter("flag takes only --n".into()));
            }
            flag(n.ok_or_else(|| GraphError::InvalidParameter("flag requires --n".into()))?)
        }
        "grassmannian" => {
            let k = k.ok_or_else(|| {
                GraphError::InvalidParameter("grassmannian requires --k".into())
            })?;
            let n = n.ok_or_else(|| {
                GraphError::InvalidParameter("grassmannian requires --n".into())
            })?;
            grassmannian(k, n)
        }
        "paper-flag3" => no_params(paper_flag3()),
        "paper-hessenberg" => no_params(paper_hessenberg()),
        "paper-quadric" => no_params(paper_quadric()),
        _ => Err(GraphError::UnknownBuiltin(name.into())),
    }
}
