//! Generators for the graph families with known game values, plus the
//! structural recogniser for trees attaining the leaf bound.

mod caterpillar;
mod family_h;
mod random;
mod spec;

pub use caterpillar::{caterpillar, is_in_family_t, CaterpillarSpec};
pub use family_h::{family_h, FamilyHSpec};
pub use random::{random_connected_bipartite, random_connected_graph, random_tree};
pub use spec::{FamilySpec, GenPetersenSpec, GrsSpec, HjkSpec, KneserSpec, MultipartiteSpec};

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid parameters: {0}")]
    Params(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn bad(msg: impl Into<String>) -> FamilyError {
    FamilyError::Params(msg.into())
}

fn labelled(n: usize, edges: &[(usize, usize)], labels: Vec<String>) -> Result<Graph, FamilyError> {
    Ok(Graph::new(n, edges)?.with_labels(labels)?)
}

fn numbered(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// `P_n`, vertices in path order.
pub fn path(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(bad("path needs n >= 1"));
    }
    let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    labelled(n, &e, numbered(n))
}

pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(bad("cycle needs n >= 3"));
    }
    let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    labelled(n, &e, numbered(n))
}

pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(bad("complete graph needs n >= 1"));
    }
    let mut e = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            e.push((i, j));
        }
    }
    labelled(n, &e, numbered(n))
}

/// `K_{1,n}`: centre 0 and leaves `1..=n`.
pub fn star(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(bad("star needs at least one leaf"));
    }
    let e: Vec<_> = (1..=n).map(|i| (0, i)).collect();
    let mut labels = vec!["centre".to_string()];
    labels.extend((1..=n).map(|i| format!("leaf{i}")));
    labelled(n + 1, &e, labels)
}

/// `K_{2,...,2}` with `t` parts; vertices `2i` and `2i+1` form part `i`.
pub fn cocktail_party(t: usize) -> Result<Graph, FamilyError> {
    if t < 2 {
        return Err(bad("cocktail party graph needs t >= 2"));
    }
    multipartite(&vec![2; t])
}

/// `Q_d` on binary strings of length `d`.
pub fn hypercube(d: usize) -> Result<Graph, FamilyError> {
    if d > 6 {
        return Err(bad("hypercube dimension above 6 exceeds the vertex cap"));
    }
    let n = 1usize << d;
    let mut e = Vec::new();
    for v in 0..n {
        for b in 0..d {
            let w = v ^ (1 << b);
            if v < w {
                e.push((v, w));
            }
        }
    }
    let labels = (0..n).map(|v| if d == 0 { "ε".into() } else { format!("{v:0d$b}") }).collect();
    labelled(n, &e, labels)
}

/// Complete multipartite graph. Parts must be listed largest first so that
/// the caller states the ordering the formulas assume.
pub fn multipartite(parts: &[usize]) -> Result<Graph, FamilyError> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(bad("multipartite graph needs at least one part, all non-empty"));
    }
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(bad(format!("parts {parts:?} must be sorted in descending order")));
    }
    let mut part_of = Vec::new();
    let mut labels = Vec::new();
    for (p, &size) in parts.iter().enumerate() {
        for i in 0..size {
            part_of.push(p);
            labels.push(format!("{}.{}", p + 1, i + 1));
        }
    }
    let n = part_of.len();
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                e.push((u, v));
            }
        }
    }
    labelled(n, &e, labels)
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Kneser graph `K(n,k)`: the `k`-subsets of `{1..n}` in lexicographic
/// order, adjacent when disjoint. Labels read like `{1,2}`.
pub fn kneser(n: usize, k: usize) -> Result<Graph, FamilyError> {
    if k < 1 || n < 2 * k {
        return Err(bad(format!("Kneser graph needs n >= 2k >= 2, got n={n}, k={k}")));
    }
    let subsets = k_subsets(n, k);
    if subsets.len() > crate::graph::VERTEX_CAP {
        return Err(GraphError::TooLarge { n: subsets.len(), cap: crate::graph::VERTEX_CAP }.into());
    }
    let masks: Vec<u64> = subsets.iter().map(|s| s.iter().fold(0, |m, &x| m | 1 << x)).collect();
    let mut e = Vec::new();
    for i in 0..masks.len() {
        for j in i + 1..masks.len() {
            if masks[i] & masks[j] == 0 {
                e.push((i, j));
            }
        }
    }
    let labels = subsets
        .iter()
        .map(|s| format!("{{{}}}", s.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    labelled(masks.len(), &e, labels)
}

/// Generalised Petersen graph `P(n,k)`: outer cycle `u_i = i`, inner
/// vertices `v_i = n + i` joined to `v_{i+k}`, spokes `u_i v_i`.
pub fn generalized_petersen(n: usize, k: usize) -> Result<Graph, FamilyError> {
    if n < 3 || k < 1 || 2 * k >= n {
        return Err(bad(format!("P(n,k) needs n >= 3 and 1 <= k < n/2, got n={n}, k={k}")));
    }
    let mut e = Vec::new();
    for i in 0..n {
        e.push((i, (i + 1) % n));
        e.push((i, n + i));
        e.push((n + i, n + (i + k) % n));
    }
    let mut labels: Vec<String> = (0..n).map(|i| format!("u{i}")).collect();
    labels.extend((0..n).map(|i| format!("v{i}")));
    labelled(2 * n, &e, labels)
}

/// Lexicographic product `G ∘ H`; vertex `(g, h)` gets id `g * n(H) + h`.
pub fn lexicographic(g: &Graph, h: &Graph) -> Result<Graph, FamilyError> {
    let (ng, nh) = (g.order(), h.order());
    let n = ng * nh;
    if n > crate::graph::VERTEX_CAP {
        return Err(GraphError::TooLarge { n, cap: crate::graph::VERTEX_CAP }.into());
    }
    let id = |a: usize, b: usize| a * nh + b;
    let mut e = Vec::new();
    for a in 0..ng {
        for b in 0..nh {
            for a2 in 0..ng {
                for b2 in 0..nh {
                    let (u, v) = (id(a, b), id(a2, b2));
                    if u < v && (g.has_edge(a, a2) || (a == a2 && h.has_edge(b, b2))) {
                        e.push((u, v));
                    }
                }
            }
        }
    }
    let mut labels = Vec::with_capacity(n);
    for a in 0..ng {
        for b in 0..nh {
            labels.push(format!("({},{})", g.label(a), h.label(b)));
        }
    }
    labelled(n, &e, labels)
}

/// `G(r,s)`: `r` four-cycles and `s` triangles sharing the edge `xy`.
/// Ids: `x = 0`, `y = 1`, `x_i = 1 + i`, `y_i = 1 + r + i`,
/// `w_j = 1 + 2r + j` (1-based `i`, `j`).
pub fn grs(r: usize, s: usize) -> Result<Graph, FamilyError> {
    if r < 1 || s < 1 {
        return Err(bad("G(r,s) needs r >= 1 and s >= 1"));
    }
    let n = 2 * r + s + 2;
    let mut e = vec![(0, 1)];
    let mut labels = vec!["x".to_string(), "y".to_string()];
    for i in 1..=r {
        labels.push(format!("x{i}"));
    }
    for i in 1..=r {
        labels.push(format!("y{i}"));
    }
    for j in 1..=s {
        labels.push(format!("w{j}"));
    }
    for i in 1..=r {
        let (xi, yi) = (1 + i, 1 + r + i);
        e.extend([(0, xi), (1, yi), (xi, yi)]);
    }
    for j in 1..=s {
        let w = 1 + 2 * r + j;
        e.extend([(w, 0), (w, 1)]);
    }
    labelled(n, &e, labels)
}

/// `H(j,k)`: a clique on `J1 ∪ J2 ∪ K1 ∪ K2` (sizes `j, j, k, k`, in that
/// id order), then `z`, `x1`, `x2`; `x_i` sees `J_i ∪ K_i` and `z` sees
/// `J1 ∪ J2`.
pub fn hjk(j: usize, k: usize) -> Result<Graph, FamilyError> {
    if k < 1 || j < k {
        return Err(bad(format!("H(j,k) needs j >= k >= 1, got j={j}, k={k}")));
    }
    let clique = 2 * (j + k);
    let (z, x1, x2) = (clique, clique + 1, clique + 2);
    let j1 = 0..j;
    let j2 = j..2 * j;
    let k1 = 2 * j..2 * j + k;
    let k2 = 2 * j + k..clique;
    let mut e = Vec::new();
    for a in 0..clique {
        for b in a + 1..clique {
            e.push((a, b));
        }
    }
    for v in j1.clone().chain(k1.clone()) {
        e.push((x1, v));
    }
    for v in j2.clone().chain(k2.clone()) {
        e.push((x2, v));
    }
    for v in j1.clone().chain(j2.clone()) {
        e.push((z, v));
    }
    let mut labels = Vec::new();
    labels.extend(j1.map(|i| format!("J1.{}", i + 1)));
    labels.extend(j2.map(|i| format!("J2.{}", i - j + 1)));
    labels.extend(k1.map(|i| format!("K1.{}", i - 2 * j + 1)));
    labels.extend(k2.map(|i| format!("K2.{}", i - 2 * j - k + 1)));
    labels.extend(["z".to_string(), "x1".to_string(), "x2".to_string()]);
    labelled(clique + 3, &e, labels)
}
