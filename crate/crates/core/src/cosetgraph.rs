//! Coset graphs of linear codes and distance-regularity checks.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::codecore::{Code, SyndromeSpace};
use crate::error::{domain, Error, Result};
use crate::guards::Guards;
use crate::spectra::IntersectionArray;

const UNSEEN: u32 = u32::MAX;

/// Weighted graph in compressed sparse row form. Vertex v has neighbours
/// `targets[offsets[v]..offsets[v+1]]`, sorted, with matching multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetGraph {
    offsets: Vec<usize>,
    targets: Vec<u32>,
    mult: Vec<u32>,
    /// Length and alphabet of the code, when built from one.
    code_params: Option<(usize, usize)>,
}

/// Which adjacency the regularity check counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Semantics {
    /// Multiplicities collapsed, loops dropped.
    Simple,
    /// Neighbours counted with multiplicity, loops included.
    Multi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    Full,
    /// BFS from a fixed set of roots only.
    Sampled {
        roots: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DrgReport {
    pub distance_regular: bool,
    pub connected: bool,
    pub diameter: usize,
    pub semantics: Semantics,
    pub mode: CheckMode,
    pub intersection_array: Option<IntersectionArray>,
}

impl CosetGraph {
    /// Cayley multigraph on the syndromes, with generators the syndromes of
    /// every gamma e_i.
    pub fn from_code(code: &Code, guards: &Guards) -> Result<Self> {
        if !code.is_linear() {
            return Err(domain("coset graph needs a linear code"));
        }
        let space = SyndromeSpace::new(code, guards)?;
        let mut gens: BTreeMap<u32, u32> = BTreeMap::new();
        for &g in space.generators() {
            *gens.entry(g).or_insert(0) += 1;
        }
        let v = space.size();
        let mut offsets = Vec::with_capacity(v + 1);
        let mut targets = Vec::with_capacity(v * gens.len());
        let mut mult = Vec::with_capacity(v * gens.len());
        offsets.push(0);
        let mut row: Vec<(u32, u32)> = Vec::with_capacity(gens.len());
        for s in 0..v as u32 {
            row.clear();
            row.extend(gens.iter().map(|(&g, &m)| (space.add(s, g), m)));
            row.sort_unstable();
            for &(t, m) in &row {
                targets.push(t);
                mult.push(m);
            }
            offsets.push(targets.len());
        }
        Ok(CosetGraph { offsets, targets, mult, code_params: Some((code.n(), code.q())) })
    }

    /// Simple undirected graph from an edge list.
    pub fn from_edges(vertices: usize, edges: &[(u32, u32)]) -> Result<Self> {
        let mut adj: Vec<BTreeMap<u32, u32>> = vec![BTreeMap::new(); vertices];
        for &(a, b) in edges {
            if a as usize >= vertices || b as usize >= vertices {
                return Err(domain(format!("edge ({a}, {b}) outside {vertices} vertices")));
            }
            *adj[a as usize].entry(b).or_insert(0) += 1;
            if a != b {
                *adj[b as usize].entry(a).or_insert(0) += 1;
            }
        }
        let mut offsets = vec![0];
        let (mut targets, mut mult) = (Vec::new(), Vec::new());
        for row in adj {
            for (t, m) in row {
                targets.push(t);
                mult.push(m);
            }
            offsets.push(targets.len());
        }
        Ok(CosetGraph { offsets, targets, mult, code_params: None })
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Neighbours of v with multiplicities.
    pub fn neighbors(&self, v: u32) -> impl Iterator<Item = (u32, u32)> + '_ {
        let (lo, hi) = (self.offsets[v as usize], self.offsets[v as usize + 1]);
        self.targets[lo..hi].iter().copied().zip(self.mult[lo..hi].iter().copied())
    }

    /// Total multiplicity out of v.
    pub fn degree(&self, v: u32, semantics: Semantics) -> u64 {
        self.weighted(v, semantics).map(|(_, m)| m as u64).sum()
    }

    fn weighted(&self, v: u32, semantics: Semantics) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.neighbors(v).filter_map(move |(t, m)| match semantics {
            Semantics::Multi => Some((t, m)),
            Semantics::Simple => (t != v).then_some((t, 1)),
        })
    }

    /// Whether some edge carries multiplicity above one or is a loop.
    pub fn has_multi_edges(&self) -> bool {
        (0..self.vertex_count() as u32).any(|v| self.neighbors(v).any(|(t, m)| m > 1 || t == v))
    }

    /// Undirected simple edges (a < b), in vertex order, with multiplicities.
    pub fn edges(&self) -> Vec<(u32, u32, u32)> {
        (0..self.vertex_count() as u32)
            .flat_map(|v| self.neighbors(v).filter(move |&(t, _)| v < t).map(move |(t, m)| (v, t, m)))
            .collect()
    }

    /// Multiplicities agree in both directions.
    pub fn is_symmetric(&self) -> bool {
        let mut seen = BTreeMap::new();
        for v in 0..self.vertex_count() as u32 {
            for (t, m) in self.neighbors(v) {
                seen.insert((v, t), m);
            }
        }
        seen.iter().all(|(&(a, b), m)| seen.get(&(b, a)) == Some(m))
    }

    pub fn distances_from(&self, root: u32) -> Vec<u32> {
        let mut dist = vec![UNSEEN; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[root as usize] = 0;
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            let dv = dist[v as usize];
            for (t, _) in self.neighbors(v) {
                if dist[t as usize] == UNSEEN {
                    dist[t as usize] = dv + 1;
                    queue.push_back(t);
                }
            }
        }
        dist
    }

    /// Counts (c, a, b) of neighbour weight into cells l-1, l, l+1 of a
    /// labelling, gathered per cell.
    pub fn partition_counts(&self, labels: &[u8], semantics: Semantics) -> Vec<BTreeSet<(u64, u64, u64)>> {
        let cells = labels.iter().map(|&l| l as usize + 1).max().unwrap_or(0);
        let mut out = vec![BTreeSet::new(); cells];
        for v in 0..self.vertex_count() as u32 {
            let l = labels[v as usize] as i64;
            let mut t = (0u64, 0u64, 0u64);
            for (u, m) in self.weighted(v, semantics) {
                match labels[u as usize] as i64 - l {
                    -1 => t.0 += m as u64,
                    0 => t.1 += m as u64,
                    1 => t.2 += m as u64,
                    _ => {}
                }
            }
            out[l as usize].insert(t);
        }
        out
    }

    fn roots(&self, mode: CheckMode) -> Vec<u32> {
        let v = self.vertex_count();
        match mode {
            CheckMode::Full => (0..v as u32).collect(),
            CheckMode::Sampled { roots } => {
                let k = roots.clamp(1, v);
                (0..k).map(|i| (i * v / k) as u32).collect()
            }
        }
    }

    /// Full check when V <= 2^13 and V^2 deg <= 2^30, otherwise 64 sampled roots.
    pub fn default_mode(&self) -> CheckMode {
        let v = self.vertex_count() as u128;
        let deg = self.degree(0, Semantics::Multi).max(1) as u128;
        if v <= 1 << 13 && v * v * deg <= 1 << 30 {
            CheckMode::Full
        } else {
            CheckMode::Sampled { roots: 64 }
        }
    }

    /// Checks that every chosen root sees the same (c_i, a_i, b_i) at every
    /// vertex of every distance layer.
    pub fn is_distance_regular(&self, semantics: Semantics, mode: CheckMode, guards: &Guards) -> Result<DrgReport> {
        let v = self.vertex_count();
        if v == 0 {
            return Err(domain("empty graph"));
        }
        let roots = self.roots(mode);
        let ops = roots.len() as u128 * self.targets.len() as u128;
        guards.pair_ops(ops)?;
        let mut report = DrgReport {
            distance_regular: false,
            connected: false,
            diameter: 0,
            semantics,
            mode,
            intersection_array: None,
        };
        let mut reference: Option<Vec<(u64, u64, u64)>> = None;
        for &root in &roots {
            let dist = self.distances_from(root);
            if dist.iter().any(|&d| d == UNSEEN) {
                return Ok(report);
            }
            let diameter = *dist.iter().max().unwrap_or(&0) as usize;
            let mut layer: Vec<Option<(u64, u64, u64)>> = vec![None; diameter + 1];
            for x in 0..v as u32 {
                let i = dist[x as usize] as i64;
                let mut t = (0u64, 0u64, 0u64);
                for (u, m) in self.weighted(x, semantics) {
                    match dist[u as usize] as i64 - i {
                        -1 => t.0 += m as u64,
                        0 => t.1 += m as u64,
                        _ => t.2 += m as u64,
                    }
                }
                match layer[i as usize] {
                    None => layer[i as usize] = Some(t),
                    Some(prev) if prev != t => {
                        report.connected = true;
                        report.diameter = diameter;
                        return Ok(report);
                    }
                    _ => {}
                }
            }
            let layer: Vec<(u64, u64, u64)> = layer.into_iter().map(|t| t.expect("layer reached")).collect();
            match &reference {
                None => reference = Some(layer),
                Some(r) if *r != layer => {
                    report.connected = true;
                    report.diameter = diameter.max(r.len() - 1);
                    return Ok(report);
                }
                _ => {}
            }
        }
        let layers = reference.expect("at least one root");
        let diameter = layers.len() - 1;
        let degree = self.degree(0, semantics);
        let (n, q) = match self.code_params {
            Some((n, q)) if (n * (q - 1)) as u64 == degree => (n, q),
            _ => (degree as usize, 2),
        };
        let b = layers[..diameter].iter().map(|t| t.2).collect();
        let c = layers[1..].iter().map(|t| t.0).collect();
        report.connected = true;
        report.diameter = diameter;
        report.distance_regular = true;
        report.intersection_array = Some(IntersectionArray::new(n, q, b, c)?);
        Ok(report)
    }

    /// Graphviz rendering; edges carry their multiplicity as a label when it
    /// exceeds one.
    pub fn to_dot(&self) -> Result<String> {
        if self.vertex_count() == 0 {
            return Err(Error::Domain(String::from("empty graph")));
        }
        let mut s = String::from("graph coset {\n");
        for v in 0..self.vertex_count() {
            let _ = writeln!(s, "  {v};");
        }
        for (a, b, m) in self.edges() {
            if m > 1 {
                let _ = writeln!(s, "  {a} -- {b} [label=\"{m}\"];");
            } else {
                let _ = writeln!(s, "  {a} -- {b};");
            }
        }
        for v in 0..self.vertex_count() as u32 {
            for (t, m) in self.neighbors(v) {
                if t == v {
                    let _ = writeln!(s, "  {v} -- {v} [label=\"{m}\"];");
                }
            }
        }
        s.push_str("}\n");
        Ok(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codecore::{golay_binary, hamming_parity};
    use crate::fieldkit::Field;
    use crate::spectra::{analyze, Mode};
    use proptest::prelude::*;

    fn g() -> Guards {
        Guards::default()
    }

    fn hamming(q: u32, m: usize) -> Code {
        let f = Field::gf(q).unwrap();
        let h = hamming_parity(&f, m).unwrap();
        Code::from_parity_check(&f, h[0].len(), &h).unwrap()
    }

    #[test]
    fn hamming_graph_is_complete() {
        let graph = CosetGraph::from_code(&hamming(2, 3), &g()).unwrap();
        assert_eq!(graph.vertex_count(), 8);
        assert_eq!(graph.edges().len(), 28);
        assert!(!graph.has_multi_edges());
        let rep = graph.is_distance_regular(Semantics::Simple, CheckMode::Full, &g()).unwrap();
        assert!(rep.distance_regular);
        assert_eq!(rep.intersection_array.unwrap().to_brace_string(), "{7;1}");
        let dot = graph.to_dot().unwrap();
        assert_eq!(dot.matches(" -- ").count(), 28);
    }

    #[test]
    fn golay_graph() {
        let graph = CosetGraph::from_code(&golay_binary().unwrap(), &g()).unwrap();
        assert_eq!(graph.vertex_count(), 2048);
        assert!(graph.is_symmetric());
        assert!((0..2048).all(|v| graph.degree(v, Semantics::Multi) == 23));
        let mode = graph.default_mode();
        assert_eq!(mode, CheckMode::Full);
        let rep = graph.is_distance_regular(Semantics::Simple, mode, &g()).unwrap();
        assert_eq!(rep.diameter, 3);
        assert_eq!(rep.intersection_array.unwrap().to_brace_string(), "{23,22,21;1,2,3}");
    }

    #[test]
    fn even_weight_multigraph() {
        let f = Field::gf(2).unwrap();
        let c = Code::from_parity_check(&f, 4, &[vec![1, 1, 1, 1]]).unwrap();
        let graph = CosetGraph::from_code(&c, &g()).unwrap();
        assert_eq!(graph.vertex_count(), 2);
        assert_eq!(graph.edges(), vec![(0, 1, 4)]);
        assert!(graph.has_multi_edges());
        let multi = graph.is_distance_regular(Semantics::Multi, CheckMode::Full, &g()).unwrap();
        assert_eq!(multi.intersection_array.unwrap().to_brace_string(), "{4;4}");
        let simple = graph.is_distance_regular(Semantics::Simple, CheckMode::Full, &g()).unwrap();
        assert_eq!(simple.intersection_array.unwrap().to_brace_string(), "{1;1}");
        assert!(graph.to_dot().unwrap().contains("label=\"4\""));
    }

    #[test]
    fn path_is_not_distance_regular() {
        let p3 = CosetGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let rep = p3.is_distance_regular(Semantics::Simple, CheckMode::Full, &g()).unwrap();
        assert!(!rep.distance_regular && rep.connected);
        assert!(rep.intersection_array.is_none());
    }

    #[test]
    fn disconnected_and_empty() {
        let two = CosetGraph::from_edges(2, &[]).unwrap();
        let rep = two.is_distance_regular(Semantics::Simple, CheckMode::Full, &g()).unwrap();
        assert!(!rep.connected);
        let empty = CosetGraph::from_edges(0, &[]).unwrap();
        assert!(empty.to_dot().is_err());
        assert!(empty.is_distance_regular(Semantics::Simple, CheckMode::Full, &g()).is_err());
    }

    #[test]
    fn nonlinear_rejected() {
        let f = Field::gf(2).unwrap();
        let c = Code::from_codewords(&f, 3, vec![vec![0, 0, 0], vec![0, 0, 1], vec![1, 1, 1]]).unwrap();
        assert!(matches!(CosetGraph::from_code(&c, &g()), Err(Error::Domain(_))));
    }

    #[test]
    fn sampled_mode_agrees_with_full() {
        let graph = CosetGraph::from_code(&hamming(4, 2), &g()).unwrap();
        let full = graph.is_distance_regular(Semantics::Multi, CheckMode::Full, &g()).unwrap();
        let some = graph.is_distance_regular(Semantics::Multi, CheckMode::Sampled { roots: 4 }, &g()).unwrap();
        assert_eq!(full.intersection_array, some.intersection_array);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn graph_counts_match_equitable_counts(rows in 1usize..5, n in 3usize..10, seed in proptest::collection::vec(0u8..2, 45)) {
            let f = Field::gf(2).unwrap();
            let h: Vec<Vec<u8>> = seed.chunks(n).take(rows).filter(|c| c.len() == n).map(|c| c.to_vec()).collect();
            prop_assume!(!h.is_empty());
            let code = Code::from_parity_check(&f, n, &h).unwrap();
            let a = analyze(&code, &g()).unwrap();
            prop_assume!(a.partition.mode == Mode::Syndrome);
            let graph = CosetGraph::from_code(&code, &g()).unwrap();
            let counts = graph.partition_counts(&a.partition.labels, Semantics::Multi);
            prop_assert_eq!(&counts, &a.equitable.cells);
            let rep = graph.is_distance_regular(Semantics::Multi, CheckMode::Full, &g()).unwrap();
            prop_assert_eq!(rep.distance_regular, a.classification.completely_regular);
            if rep.distance_regular {
                prop_assert_eq!(rep.intersection_array, a.intersection_array);
            }
        }
    }
}
