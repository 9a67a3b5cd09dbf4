//! Expansion analysis of gadget connectivity graphs.
//!
//! A gadget's χ-checks form the vertices; each κ qubit touches exactly two
//! χ-checks and contracts to an edge, giving a (multi)graph whose edge
//! Cheeger constant controls how well syndrome information spreads through
//! the gadget. Graphs with h < 1 are repaired by adding edges, each of
//! which costs one extra gadget qubit plus one extra gauge check.

use std::collections::HashSet;
use std::fmt;

use crate::error::Error;
use crate::gadget::Gadget;

/// Exact non-negative rational, kept reduced. Avoids float comparisons in
/// the expansion certificates.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Ratio {
    num: u64,
    den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den > 0, "denominator must be positive");
        let g = gcd(num.max(1), den);
        if num == 0 {
            Ratio { num: 0, den: 1 }
        } else {
            Ratio {
                num: num / g,
                den: den / g,
            }
        }
    }

    pub fn numerator(&self) -> u64 {
        self.num
    }

    pub fn denominator(&self) -> u64 {
        self.den
    }

    pub fn is_at_least_one(&self) -> bool {
        self.num >= self.den
    }

    pub fn as_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Largest vertex count for which the exhaustive subset scan is accepted.
pub const EXHAUSTIVE_BOUND: usize = 26;

/// Multigraph on the χ-checks of a gadget; parallel edges are kept with
/// multiplicity since each corresponds to a distinct qubit.
#[derive(Clone, Debug)]
pub struct ContractedGraph {
    num_vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl ContractedGraph {
    pub fn new(num_vertices: usize, edges: Vec<(usize, usize)>) -> Self {
        for &(u, v) in &edges {
            assert!(u < num_vertices && v < num_vertices && u != v);
        }
        ContractedGraph {
            num_vertices,
            edges,
        }
    }

    /// Contract each κ qubit of a gadget to the edge between its two
    /// incident χ-checks; any κ of degree ≠ 2 is rejected.
    pub fn from_gadget(gadget: &Gadget) -> Result<Self, Error> {
        let incidence = gadget.incidence();
        let mut edges = Vec::with_capacity(incidence.cols());
        for jj in 0..incidence.cols() {
            let ends: Vec<usize> = (0..incidence.rows())
                .filter(|&i| incidence.get(i, jj))
                .collect();
            if ends.len() != 2 {
                return Err(Error::DegreeNotTwo {
                    qubit: jj,
                    degree: ends.len(),
                });
            }
            edges.push((ends[0], ends[1]));
        }
        Ok(ContractedGraph {
            num_vertices: incidence.rows(),
            edges,
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// The graph with extra edges appended.
    pub fn augmented(&self, extra: &[(usize, usize)]) -> Self {
        let mut edges = self.edges.clone();
        edges.extend_from_slice(extra);
        ContractedGraph::new(self.num_vertices, edges)
    }

    fn adjacency(&self) -> Vec<Vec<(usize, u32)>> {
        let mut adj: Vec<Vec<(usize, u32)>> = vec![Vec::new(); self.num_vertices];
        for &(u, v) in &self.edges {
            add_mult(&mut adj[u], v);
            add_mult(&mut adj[v], u);
        }
        adj
    }
}

fn add_mult(list: &mut Vec<(usize, u32)>, v: usize) {
    if let Some(entry) = list.iter_mut().find(|e| e.0 == v) {
        entry.1 += 1;
    } else {
        list.push((v, 1));
    }
}

/// A Cheeger-constant certificate: the minimum of cut(S)/min(|S|,|S̄|)
/// together with a minimizing side (the smaller one).
#[derive(Clone, Debug)]
pub struct CheegerResult {
    pub h: Ratio,
    pub witness: Vec<usize>,
}

/// Exhaustive edge-Cheeger constant by a Gray-code scan over all vertex
/// subsets, exact for graphs within [`EXHAUSTIVE_BOUND`].
pub fn contracted_cheeger(graph: &ContractedGraph) -> Result<CheegerResult, Error> {
    let v = graph.num_vertices;
    if v > EXHAUSTIVE_BOUND {
        return Err(Error::ExhaustiveBoundExceeded {
            v,
            bound: EXHAUSTIVE_BOUND,
        });
    }
    assert!(v >= 2, "Cheeger constant needs at least two vertices");
    let adj = graph.adjacency();
    let mut mask: u64 = 0;
    let mut cut: i64 = 0;
    let mut size: usize = 0;
    let mut best_num: u64 = u64::MAX;
    let mut best_den: u64 = 1;
    let mut best_mask: u64 = 0;
    for i in 1u64..(1u64 << v) {
        let b = i.trailing_zeros() as usize;
        mask ^= 1 << b;
        let entering = mask >> b & 1 == 1;
        let mut delta: i64 = 0;
        for &(u, m) in &adj[b] {
            if mask >> u & 1 == 1 {
                delta -= m as i64;
            } else {
                delta += m as i64;
            }
        }
        if entering {
            cut += delta;
            size += 1;
        } else {
            cut -= delta;
            size -= 1;
        }
        let den = size.min(v - size) as u64;
        if den == 0 {
            continue;
        }
        let num = cut as u64;
        if (num as u128) * (best_den as u128) < (best_num as u128) * (den as u128) {
            best_num = num;
            best_den = den;
            best_mask = mask;
        }
    }
    let side: Vec<usize> = (0..v).filter(|&i| best_mask >> i & 1 == 1).collect();
    let witness = if side.len() * 2 <= v {
        side
    } else {
        (0..v).filter(|&i| best_mask >> i & 1 == 0).collect()
    };
    Ok(CheegerResult {
        h: Ratio::new(best_num, best_den),
        witness,
    })
}

/// Bipartite check/qubit view of a gadget graph: vertices are χ-checks,
/// constraints are the κ qubits with their incident checks.
#[derive(Clone, Debug)]
pub struct BipartiteBoundaryGraph {
    num_vertices: usize,
    constraints: Vec<Vec<usize>>,
}

impl BipartiteBoundaryGraph {
    pub fn from_gadget(gadget: &Gadget) -> Self {
        let incidence = gadget.incidence();
        let constraints = (0..incidence.cols())
            .map(|jj| {
                (0..incidence.rows())
                    .filter(|&i| incidence.get(i, jj))
                    .collect()
            })
            .collect();
        BipartiteBoundaryGraph {
            num_vertices: incidence.rows(),
            constraints,
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    /// Qubits adjacent to both sides of the split — the boundary of `S`.
    pub fn boundary_size(&self, in_s: &[bool]) -> usize {
        self.constraints
            .iter()
            .filter(|c| c.iter().any(|&i| in_s[i]) && c.iter().any(|&i| !in_s[i]))
            .count()
    }
}

/// Exhaustive boundary-Cheeger constant of the bipartite view. For
/// degree-2 qubits the boundary is exactly the contracted edge cut, so
/// this agrees with [`contracted_cheeger`] on gadget graphs.
pub fn boundary_cheeger(graph: &BipartiteBoundaryGraph) -> Result<CheegerResult, Error> {
    let v = graph.num_vertices;
    if v > EXHAUSTIVE_BOUND {
        return Err(Error::ExhaustiveBoundExceeded {
            v,
            bound: EXHAUSTIVE_BOUND,
        });
    }
    let mut best: Option<(u64, u64, u64)> = None;
    let mut in_s = vec![false; v];
    for mask in 1u64..(1u64 << v) {
        for (i, flag) in in_s.iter_mut().enumerate() {
            *flag = mask >> i & 1 == 1;
        }
        let size = mask.count_ones() as u64;
        let den = size.min(v as u64 - size);
        if den == 0 {
            continue;
        }
        let num = graph.boundary_size(&in_s) as u64;
        let better = match best {
            None => true,
            Some((bn, bd, _)) => (num as u128) * (bd as u128) < (bn as u128) * (den as u128),
        };
        if better {
            best = Some((num, den, mask));
        }
    }
    let (num, den, mask) = best.expect("graph has at least two vertices");
    let side: Vec<usize> = (0..v).filter(|&i| mask >> i & 1 == 1).collect();
    let witness = if side.len() * 2 <= v {
        side
    } else {
        (0..v).filter(|&i| mask >> i & 1 == 0).collect()
    };
    Ok(CheegerResult {
        h: Ratio::new(num, den),
        witness,
    })
}

/// An edge set whose addition restores h ≥ 1. Each edge realizes one new
/// gadget qubit plus one new gauge check, i.e. two physical qubits.
#[derive(Clone, Debug)]
pub struct Augmentation {
    pub edges: Vec<(usize, usize)>,
}

impl Augmentation {
    pub fn added_qubits(&self) -> usize {
        2 * self.edges.len()
    }
}

/// All subsets violating cut(S) ≥ min(|S|,|S̄|), as (smaller-side mask,
/// deficiency) pairs, deduplicated across complements.
pub fn violated_subsets(graph: &ContractedGraph) -> Vec<(u64, u64)> {
    let v = graph.num_vertices;
    let adj = graph.adjacency();
    let mut mask: u64 = 0;
    let mut cut: i64 = 0;
    let mut size: usize = 0;
    let mut seen: HashSet<u64> = HashSet::new();
    let mut out = Vec::new();
    let full = (1u64 << v) - 1;
    for i in 1u64..(1u64 << v) {
        let b = i.trailing_zeros() as usize;
        mask ^= 1 << b;
        let entering = mask >> b & 1 == 1;
        let mut delta: i64 = 0;
        for &(u, m) in &adj[b] {
            if mask >> u & 1 == 1 {
                delta -= m as i64;
            } else {
                delta += m as i64;
            }
        }
        if entering {
            cut += delta;
            size += 1;
        } else {
            cut -= delta;
            size -= 1;
        }
        let den = size.min(v - size) as u64;
        if den == 0 || cut as u64 >= den {
            continue;
        }
        let canonical = if size * 2 <= v { mask } else { full & !mask };
        if seen.insert(canonical) {
            out.push((canonical, den - cut as u64));
        }
    }
    out.sort_unstable();
    out
}

fn crossing(mask: u64, u: usize, w: usize) -> bool {
    (mask >> u & 1) != (mask >> w & 1)
}

/// Depth-first cover search: find `depth` edges so every violated subset
/// gets at least its deficiency in crossing edges. Branches on crossing
/// edges of the first still-deficient subset in sorted order, so the
/// first solution found is deterministic.
fn cover_exact_snapshot(
    v: usize,
    pool: &[(u64, u64)],
    deficits: &[u64],
    chosen: &mut Vec<(usize, usize)>,
    depth: usize,
) -> bool {
    let target = match (0..pool.len()).find(|&i| deficits[i] > 0) {
        None => return true,
        Some(i) => i,
    };
    if depth == 0 || deficits[target] > depth as u64 {
        return false;
    }
    let mask = pool[target].0;
    for u in 0..v {
        for w in u + 1..v {
            if !crossing(mask, u, w) {
                continue;
            }
            let next: Vec<u64> = deficits
                .iter()
                .enumerate()
                .map(|(i, &d)| {
                    if d > 0 && crossing(pool[i].0, u, w) {
                        d - 1
                    } else {
                        d
                    }
                })
                .collect();
            chosen.push((u, w));
            if cover_exact_snapshot(v, pool, &next, chosen, depth - 1) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

fn edge_set_satisfies(pool: &[(u64, u64)], edges: &[(usize, usize)]) -> bool {
    pool.iter().all(|&(m, d)| {
        edges.iter().filter(|&&(u, w)| crossing(m, u, w)).count() as u64 >= d
    })
}

/// Greedy weighted cover prioritizing the highest-deficiency subsets,
/// followed by redundant-edge pruning and 2-for-1 exchange. Deterministic
/// but not guaranteed minimal.
fn cover_greedy(v: usize, pool: &[(u64, u64)], budget: usize) -> Option<Vec<(usize, usize)>> {
    let mut deficits: Vec<u64> = pool.iter().map(|&(_, d)| d).collect();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    while deficits.iter().any(|&d| d > 0) {
        let maxd = *deficits.iter().max().unwrap();
        let mut best: Option<((usize, usize), (usize, usize))> = None;
        for u in 0..v {
            for w in u + 1..v {
                let mut top = 0usize;
                let mut all = 0usize;
                for (i, &d) in deficits.iter().enumerate() {
                    if d > 0 && crossing(pool[i].0, u, w) {
                        all += 1;
                        if d == maxd {
                            top += 1;
                        }
                    }
                }
                if all > 0 && best.map_or(true, |(_, s)| (top, all) > s) {
                    best = Some(((u, w), (top, all)));
                }
            }
        }
        let ((u, w), _) = best?;
        for (i, d) in deficits.iter_mut().enumerate() {
            if *d > 0 && crossing(pool[i].0, u, w) {
                *d -= 1;
            }
        }
        edges.push((u, w));
    }
    // Drop edges whose removal keeps every subset covered.
    loop {
        let Some(i) = (0..edges.len()).find(|&i| {
            let mut trial = edges.clone();
            trial.remove(i);
            edge_set_satisfies(pool, &trial)
        }) else {
            break;
        };
        edges.remove(i);
    }
    // Replace pairs of edges by a single edge where possible.
    'exchange: loop {
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                for u in 0..v {
                    for w in u + 1..v {
                        let mut trial: Vec<(usize, usize)> = edges
                            .iter()
                            .enumerate()
                            .filter(|&(t, _)| t != i && t != j)
                            .map(|(_, &e)| e)
                            .collect();
                        trial.push((u, w));
                        if edge_set_satisfies(pool, &trial) {
                            trial.sort_unstable();
                            edges = trial;
                            continue 'exchange;
                        }
                    }
                }
            }
        }
        break;
    }
    if edges.len() <= budget {
        Some(edges)
    } else {
        None
    }
}

/// Find an edge set restoring h ≥ 1 using at most `budget` added edges.
///
/// Added edges can only increase cuts, so the violated subsets of the
/// base graph are exactly the constraints: each must gain crossing edges
/// equal to its deficiency. Small graphs get an exact minimum-cardinality
/// search by iterative deepening; larger ones a deterministic greedy
/// cover, whose result is still certified by re-scanning the augmented
/// graph.
pub fn augment_to_expander(
    graph: &ContractedGraph,
    budget: usize,
) -> Result<Augmentation, Error> {
    augment_to_expander_with_hint(graph, budget, None)
}

/// [`augment_to_expander`] with an optional precomputed edge set. A valid
/// hint (within budget and covering every deficiency) is used directly;
/// otherwise the search runs as usual. Hints let expensive offline
/// solutions (e.g. from annealing) be reused while still being certified
/// here by the exhaustive re-scan.
pub fn augment_to_expander_with_hint(
    graph: &ContractedGraph,
    budget: usize,
    hint: Option<&[(usize, usize)]>,
) -> Result<Augmentation, Error> {
    let v = graph.num_vertices;
    if v > EXHAUSTIVE_BOUND {
        return Err(Error::ExhaustiveBoundExceeded {
            v,
            bound: EXHAUSTIVE_BOUND,
        });
    }
    let pool = violated_subsets(graph);
    if pool.is_empty() {
        return Ok(Augmentation { edges: Vec::new() });
    }
    let deficits: Vec<u64> = pool.iter().map(|&(_, d)| d).collect();
    let hinted = hint.and_then(|h| {
        (h.len() <= budget && edge_set_satisfies(&pool, h)).then(|| h.to_vec())
    });
    let edges = if let Some(h) = hinted {
        Some(h)
    } else if v <= 16 {
        let mut found = None;
        for depth in 1..=budget {
            let mut chosen = Vec::new();
            if cover_exact_snapshot(v, &pool, &deficits, &mut chosen, depth) {
                found = Some(chosen);
                break;
            }
        }
        found
    } else {
        cover_greedy(v, &pool, budget)
    };
    let edges = edges.ok_or(Error::AugmentationBudgetExceeded { budget })?;
    // Certify independently of the covering argument.
    let augmented = graph.augmented(&edges);
    let check = contracted_cheeger(&augmented)?;
    if !check.h.is_at_least_one() {
        return Err(Error::AugmentationBudgetExceeded { budget });
    }
    Ok(Augmentation { edges })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadget::build_gadget;
    use crate::gb::catalog_code;

    #[test]
    fn ratio_ordering_and_display() {
        let a = Ratio::new(1, 2);
        let b = Ratio::new(3, 7);
        assert!(b < a);
        assert!(!b.is_at_least_one());
        assert!(Ratio::new(5, 5).is_at_least_one());
        assert_eq!(Ratio::new(6, 4), Ratio::new(3, 2));
        assert_eq!(format!("{}", Ratio::new(3, 7)), "3/7");
    }

    #[test]
    fn cycle_graph_cheeger() {
        // C4: cut of any single vertex is 2, of an antipodal pair 4,
        // adjacent pair 2; h = min(2/1, 2/2, 4/2) = 1.
        let g = ContractedGraph::new(4, vec![(0, 1), (1, 2), (2, 3), (0, 3)]);
        let res = contracted_cheeger(&g).unwrap();
        assert_eq!(res.h, Ratio::new(1, 1));
    }

    #[test]
    fn path_graph_needs_augmentation() {
        // P4: splitting at the middle edge gives cut 1 over size 2.
        let g = ContractedGraph::new(4, vec![(0, 1), (1, 2), (2, 3)]);
        let res = contracted_cheeger(&g).unwrap();
        assert_eq!(res.h, Ratio::new(1, 2));
        let aug = augment_to_expander(&g, 2).unwrap();
        assert_eq!(aug.edges.len(), 1);
        let fixed = contracted_cheeger(&g.augmented(&aug.edges)).unwrap();
        assert!(fixed.h.is_at_least_one());
    }

    #[test]
    fn r5_gadget_graphs_expand() {
        let entry = catalog_code(5).unwrap();
        let code = entry.build().unwrap();
        for seed in &entry.seeds {
            let gadget = build_gadget(&code, seed).unwrap();
            let graph = ContractedGraph::from_gadget(&gadget).unwrap();
            assert_eq!(graph.num_vertices(), 6);
            assert_eq!(graph.edges().len(), 9);
            let res = contracted_cheeger(&graph).unwrap();
            assert_eq!(res.h, Ratio::new(1, 1));
            let aug = augment_to_expander(&graph, 4).unwrap();
            assert!(aug.edges.is_empty());
        }
    }

    #[test]
    fn boundary_view_matches_contraction() {
        let entry = catalog_code(5).unwrap();
        let code = entry.build().unwrap();
        let gadget = build_gadget(&code, &entry.seeds[0]).unwrap();
        let graph = ContractedGraph::from_gadget(&gadget).unwrap();
        let bipartite = BipartiteBoundaryGraph::from_gadget(&gadget);
        let a = contracted_cheeger(&graph).unwrap();
        let b = boundary_cheeger(&bipartite).unwrap();
        assert_eq!(a.h, b.h);
    }

    #[test]
    fn r7_z2_known_constant() {
        let entry = catalog_code(7).unwrap();
        let code = entry.build().unwrap();
        let gadget = build_gadget(&code, &entry.seeds[3]).unwrap();
        let graph = ContractedGraph::from_gadget(&gadget).unwrap();
        let res = contracted_cheeger(&graph).unwrap();
        assert_eq!(res.h, Ratio::new(1, 2));
        let aug = augment_to_expander(&graph, 4).unwrap();
        assert!(aug.edges.len() <= 4);
    }

    #[test]
    fn oversized_graph_rejected() {
        let edges: Vec<(usize, usize)> = (0..29).map(|i| (i, i + 1)).collect();
        let g = ContractedGraph::new(30, edges);
        assert!(matches!(
            contracted_cheeger(&g),
            Err(Error::ExhaustiveBoundExceeded { v: 30, bound: 26 })
        ));
    }
}
