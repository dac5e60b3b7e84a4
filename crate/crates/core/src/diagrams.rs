//! Chord diagrams: perfect matchings of `2n` points on a line, with crossing
//! counts, crossing graphs, and the crossing census.
//!
//! Points are numbered 1..=2n in ascending order and every chord is drawn as
//! an arc on one side of the line, so two chords `(a,b)` and `(c,d)` with
//! `a < c` cross iff `a < c < b < d`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::Limits;

/// A perfect matching of the points 1..=2n into `n` chords.
///
/// Canonical form: within a chord the lower endpoint comes first, and chords
/// are sorted ascending by first endpoint. The constructor normalizes and
/// validates; enumeration produces canonical diagrams directly.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChordDiagram {
    chords: Vec<(u32, u32)>,
}

impl ChordDiagram {
    /// Build a diagram from chord pairs in any order and orientation.
    pub fn new(chords: Vec<(u32, u32)>) -> Result<Self> {
        let rendered = chords.iter().map(|(a, b)| format!("{a}-{b}")).join(",");
        Self::build(chords).map_err(|reason| Error::MalformedDiagram {
            input: rendered,
            reason,
        })
    }

    fn build(chords: Vec<(u32, u32)>) -> std::result::Result<Self, String> {
        if chords.is_empty() {
            return Err("a diagram needs at least one chord".to_string());
        }
        let points = 2 * chords.len() as u32;
        let mut chords: Vec<(u32, u32)> = chords
            .into_iter()
            .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
            .collect();
        chords.sort_unstable();
        let mut seen = vec![false; points as usize + 1];
        for &(a, b) in &chords {
            if a == b {
                return Err(format!("endpoint {a} is paired with itself"));
            }
            for e in [a, b] {
                if e == 0 || e > points {
                    return Err(format!("endpoint {e} is out of range 1..={points}"));
                }
                if seen[e as usize] {
                    return Err(format!("duplicate endpoint {e}"));
                }
                seen[e as usize] = true;
            }
        }
        // 2n endpoints, all distinct and in range: nothing can be missing.
        Ok(ChordDiagram { chords })
    }

    /// Used by the enumerator, which yields canonical chord lists already.
    fn from_canonical(chords: &[(u32, u32)]) -> Self {
        debug_assert!(chords.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(chords.iter().all(|&(a, b)| a < b));
        ChordDiagram {
            chords: chords.to_vec(),
        }
    }

    /// Number of chords.
    pub fn n(&self) -> usize {
        self.chords.len()
    }

    /// Number of matched points (2n).
    pub fn points(&self) -> usize {
        2 * self.chords.len()
    }

    pub fn chords(&self) -> &[(u32, u32)] {
        &self.chords
    }

    /// Number of chord pairs that cross.
    pub fn crossing_count(&self) -> usize {
        crossing_count_of(&self.chords)
    }

    /// The graph on chords 1..=n (canonical order) with an edge per crossing.
    pub fn crossing_graph(&self) -> CrossingGraph {
        let n = self.n();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if chords_cross(self.chords[i], self.chords[j]) {
                    edges.push((i + 1, j + 1));
                }
            }
        }
        CrossingGraph::new(n, edges)
    }

    /// JSON rendering: `{"n": n, "chords": [[a,b],...]}`.
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n(),
            "chords": self.chords.iter().map(|&(a, b)| vec![a, b]).collect::<Vec<_>>(),
        })
    }
}

/// Text format `a1-b1,a2-b2,...`, 1-based, e.g. `1-5,2-6,3-8,4-7`.
impl fmt::Display for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for &(a, b) in &self.chords {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{a}-{b}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for ChordDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let malformed = |reason: String| Error::MalformedDiagram {
            input: s.to_string(),
            reason,
        };
        let mut chords = Vec::new();
        for piece in s.split(',') {
            let piece = piece.trim();
            let (a, b) = piece
                .split_once('-')
                .ok_or_else(|| malformed(format!("chord `{piece}` is not of the form a-b")))?;
            let a: u32 = a
                .trim()
                .parse()
                .map_err(|_| malformed(format!("`{a}` is not a point index")))?;
            let b: u32 = b
                .trim()
                .parse()
                .map_err(|_| malformed(format!("`{b}` is not a point index")))?;
            chords.push((a, b));
        }
        ChordDiagram::build(chords).map_err(malformed)
    }
}

#[inline]
fn chords_cross(x: (u32, u32), y: (u32, u32)) -> bool {
    let ((a, b), (c, d)) = if x.0 < y.0 { (x, y) } else { (y, x) };
    a < c && c < b && b < d
}

fn crossing_count_of(chords: &[(u32, u32)]) -> usize {
    let mut m = 0;
    for i in 0..chords.len() {
        for j in (i + 1)..chords.len() {
            if chords_cross(chords[i], chords[j]) {
                m += 1;
            }
        }
    }
    m
}

/// Graph on the `n` chords of a diagram; edge `{i,j}` iff chords `i` and `j`
/// cross. Vertices are labeled 1..=n by canonical chord order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CrossingGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl CrossingGraph {
    /// Build from unordered vertex pairs; panics on self-loops or labels
    /// outside 1..=n.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        assert!(n >= 1, "a crossing graph needs at least one vertex");
        let mut edges: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(i, j)| if i <= j { (i, j) } else { (j, i) })
            .collect();
        for &(i, j) in &edges {
            assert!(i != j, "self-loop at vertex {i}");
            assert!(i >= 1 && j <= n, "edge ({i},{j}) outside 1..={n}");
        }
        edges.sort_unstable();
        edges.dedup();
        CrossingGraph { n, edges }
    }

    pub fn edgeless(n: usize) -> Self {
        CrossingGraph::new(n, std::iter::empty())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (1..=n).flat_map(|i| ((i + 1)..=n).map(move |j| (i, j)));
        CrossingGraph::new(n, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn max_edge_count(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    /// Relabel vertices: `perm[v-1]` is the new 1-based label of vertex `v`.
    pub fn relabeled(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let mut seen = vec![false; self.n + 1];
        for &t in perm {
            assert!(t >= 1 && t <= self.n && !seen[t], "not a permutation of 1..={}", self.n);
            seen[t] = true;
        }
        let edges = self
            .edges
            .iter()
            .map(|&(i, j)| (perm[i - 1], perm[j - 1]))
            .collect_vec();
        CrossingGraph::new(self.n, edges)
    }

    /// A canonical representative of this graph's isomorphism class.
    ///
    /// Vertices are colored by iterated degree refinement, then all orderings
    /// consistent with the color classes are tried and the lexicographically
    /// smallest relabeled edge list wins. Exhaustive (hence a true canonical
    /// form) for `n <= 10`; beyond that the refined order is used as-is,
    /// which is still a sound cache key.
    pub fn canonical_form(&self) -> CrossingGraph {
        if self.edges.is_empty() || self.edges.len() == self.max_edge_count() {
            return self.clone();
        }
        let classes = self.refined_classes();
        if self.n > 10 {
            let order = classes.into_iter().flatten().collect_vec();
            return self.relabeled(&inverse_order(&order, self.n));
        }
        let mut best: Option<Vec<(usize, usize)>> = None;
        for ordering in classes
            .iter()
            .map(|class| class.iter().copied().permutations(class.len()))
            .multi_cartesian_product()
        {
            let order = ordering.into_iter().flatten().collect_vec();
            let candidate = self.relabeled(&inverse_order(&order, self.n)).edges;
            if best.as_ref().is_none_or(|b| candidate < *b) {
                best = Some(candidate);
            }
        }
        CrossingGraph {
            n: self.n,
            edges: best.expect("at least one ordering"),
        }
    }

    /// Whether the two graphs are related by a vertex relabeling.
    /// Exact for `n <= 10`.
    pub fn is_isomorphic_to(&self, other: &CrossingGraph) -> bool {
        self.n == other.n && self.canonical_form() == other.canonical_form()
    }

    /// Vertex classes (0-based ids) after stable color refinement, ordered by
    /// color rank. The initial color is the degree; each round appends the
    /// sorted multiset of neighbor colors.
    fn refined_classes(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        let mut adj = vec![Vec::new(); n];
        for &(i, j) in &self.edges {
            adj[i - 1].push(j - 1);
            adj[j - 1].push(i - 1);
        }
        let mut colors = adj.iter().map(Vec::len).collect_vec();
        loop {
            let mut sigs = (0..n)
                .map(|v| {
                    let mut neighbor_colors = adj[v].iter().map(|&w| colors[w]).collect_vec();
                    neighbor_colors.sort_unstable();
                    (colors[v], neighbor_colors)
                })
                .collect_vec();
            let mut ranking = sigs.clone();
            ranking.sort();
            ranking.dedup();
            let next = sigs
                .drain(..)
                .map(|s| ranking.binary_search(&s).unwrap())
                .collect_vec();
            if next == colors {
                break;
            }
            colors = next;
        }
        let num_colors = colors.iter().max().map_or(0, |&c| c + 1);
        let mut classes = vec![Vec::new(); num_colors];
        for (v, &c) in colors.iter().enumerate() {
            classes[c].push(v);
        }
        classes.retain(|c| !c.is_empty());
        classes
    }
}

/// `order[k]` = 0-based vertex placed at position `k`; returns the 1-based
/// relabeling map expected by [`CrossingGraph::relabeled`].
fn inverse_order(order: &[usize], n: usize) -> Vec<usize> {
    let mut perm = vec![0usize; n];
    for (position, &vertex) in order.iter().enumerate() {
        perm[vertex] = position + 1;
    }
    perm
}

/// One field in a product, by statistics and charge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    NeutralParabose,
    Parafermi,
    ParafermiConjugate,
}

impl FieldKind {
    pub fn json_str(&self) -> &'static str {
        match self {
            FieldKind::NeutralParabose => "Phi",
            FieldKind::Parafermi => "psi",
            FieldKind::ParafermiConjugate => "psibar",
        }
    }
}

/// The ordered field kinds of an N-point product. Either all neutral
/// parabose, or a balanced charged parafermi pattern; N must be even (odd
/// products have vanishing vacuum matrix element and are rejected).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldPattern {
    kinds: Vec<FieldKind>,
}

impl FieldPattern {
    pub fn new(kinds: Vec<FieldKind>) -> Result<Self> {
        if kinds.is_empty() {
            return Err(Error::InvalidPattern("the pattern is empty".to_string()));
        }
        if !kinds.len().is_multiple_of(2) {
            return Err(Error::InvalidPattern(format!(
                "N = {} is odd; the vacuum matrix element vanishes",
                kinds.len()
            )));
        }
        let bose = kinds
            .iter()
            .filter(|k| matches!(k, FieldKind::NeutralParabose))
            .count();
        let fermi = kinds.iter().filter(|k| matches!(k, FieldKind::Parafermi)).count();
        let conj = kinds
            .iter()
            .filter(|k| matches!(k, FieldKind::ParafermiConjugate))
            .count();
        if bose > 0 && bose != kinds.len() {
            return Err(Error::InvalidPattern(
                "mixed parabose/parafermi products are not supported".to_string(),
            ));
        }
        if bose == 0 && fermi != conj {
            return Err(Error::InvalidPattern(format!(
                "unbalanced charged pattern: {fermi} fields vs {conj} conjugates"
            )));
        }
        Ok(FieldPattern { kinds })
    }

    /// All-neutral-parabose pattern of `num_fields` fields.
    pub fn parabose(num_fields: usize) -> Result<Self> {
        FieldPattern::new(vec![FieldKind::NeutralParabose; num_fields])
    }

    /// Alternating charged pattern `psi, psibar, psi, psibar, ...`.
    pub fn parafermi_alternating(num_fields: usize) -> Result<Self> {
        FieldPattern::new(
            (0..num_fields)
                .map(|i| {
                    if i % 2 == 0 {
                        FieldKind::Parafermi
                    } else {
                        FieldKind::ParafermiConjugate
                    }
                })
                .collect(),
        )
    }

    pub fn kinds(&self) -> &[FieldKind] {
        &self.kinds
    }

    pub fn num_fields(&self) -> usize {
        self.kinds.len()
    }

    pub fn is_charged(&self) -> bool {
        !matches!(self.kinds[0], FieldKind::NeutralParabose)
    }
}

/// `(2n-1)!!`, the number of perfect matchings of 2n points.
pub fn double_factorial_odd(n: usize) -> u64 {
    (0..n).map(|i| 2 * i as u64 + 1).product()
}

fn check_cap(n: usize, limits: &Limits) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".to_string()));
    }
    if n > limits.max_n {
        return Err(Error::CapExceeded {
            what: "diagram",
            n,
            cap: limits.max_n,
            raise: "--max-n",
        });
    }
    Ok(())
}

/// Visit every perfect matching of 1..=2n in canonical (lexicographic) order:
/// the smallest free point is paired with each larger free point in turn.
fn for_each_matching(n: usize, visit: &mut impl FnMut(&[(u32, u32)])) {
    let points = 2 * n;
    let mut used = vec![false; points + 1];
    let mut chords: Vec<(u32, u32)> = Vec::with_capacity(n);
    recurse(points, &mut used, &mut chords, visit);

    fn recurse(
        points: usize,
        used: &mut [bool],
        chords: &mut Vec<(u32, u32)>,
        visit: &mut impl FnMut(&[(u32, u32)]),
    ) {
        let a = match (1..=points).find(|&x| !used[x]) {
            Some(a) => a,
            None => {
                visit(chords);
                return;
            }
        };
        used[a] = true;
        for b in (a + 1)..=points {
            if used[b] {
                continue;
            }
            used[b] = true;
            chords.push((a as u32, b as u32));
            recurse(points, used, chords, visit);
            chords.pop();
            used[b] = false;
        }
        used[a] = false;
    }
}

/// All `(2n-1)!!` chord diagrams on 2n points, canonical, lexicographic.
pub fn enumerate_matchings(n: usize, limits: &Limits) -> Result<Vec<ChordDiagram>> {
    check_cap(n, limits)?;
    let mut out = Vec::with_capacity(double_factorial_odd(n) as usize);
    for_each_matching(n, &mut |chords| out.push(ChordDiagram::from_canonical(chords)));
    Ok(out)
}

/// Census `m -> T_{2n,m}`: how many diagrams have exactly `m` crossings.
/// Values sum to `(2n-1)!!`; the maximum `m = n(n-1)/2` is achieved once.
pub fn crossing_census(n: usize, limits: &Limits) -> Result<BTreeMap<usize, u64>> {
    check_cap(n, limits)?;
    let mut counts = BTreeMap::new();
    for_each_matching(n, &mut |chords| {
        *counts.entry(crossing_count_of(chords)).or_insert(0u64) += 1;
    });
    Ok(counts)
}

/// JSON rendering of a census: `{"n": n, "counts": {"0": c0, ...}, "total": t}`.
pub fn census_to_json(n: usize, counts: &BTreeMap<usize, u64>) -> Value {
    let total: u64 = counts.values().sum();
    json!({
        "n": n,
        "counts": counts
            .iter()
            .map(|(m, c)| (m.to_string(), json!(c)))
            .collect::<serde_json::Map<String, Value>>(),
        "total": total,
    })
}

/// The diagrams compatible with a field pattern.
///
/// Neutral parabose products admit every matching. Charged parafermi
/// products keep only matchings whose every chord joins a field position to
/// a conjugate position, in either order; for a balanced pattern that is
/// exactly the n! bijections between the two position sets.
pub fn admissible_matchings(pattern: &FieldPattern, limits: &Limits) -> Result<Vec<ChordDiagram>> {
    let n = pattern.num_fields() / 2;
    check_cap(n, limits)?;
    if !pattern.is_charged() {
        return enumerate_matchings(n, limits);
    }
    let kinds = pattern.kinds();
    let mut out = Vec::new();
    for_each_matching(n, &mut |chords| {
        let admissible = chords.iter().all(|&(a, b)| {
            let ka = kinds[a as usize - 1];
            let kb = kinds[b as usize - 1];
            matches!(
                (ka, kb),
                (FieldKind::Parafermi, FieldKind::ParafermiConjugate)
                    | (FieldKind::ParafermiConjugate, FieldKind::Parafermi)
            )
        });
        if admissible {
            out.push(ChordDiagram::from_canonical(chords));
        }
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diagram(s: &str) -> ChordDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn enumerate_smallest_cases() {
        let limits = Limits::default();
        let one = enumerate_matchings(1, &limits).unwrap();
        assert_eq!(one, vec![diagram("1-2")]);
        let two = enumerate_matchings(2, &limits).unwrap();
        assert_eq!(
            two,
            vec![diagram("1-2,3-4"), diagram("1-3,2-4"), diagram("1-4,2-3")]
        );
        assert_eq!(enumerate_matchings(3, &limits).unwrap().len(), 15);
    }

    #[test]
    fn enumerate_counts_and_order() {
        let limits = Limits::default();
        for n in 1..=6 {
            let diagrams = enumerate_matchings(n, &limits).unwrap();
            assert_eq!(diagrams.len() as u64, double_factorial_odd(n));
            // Canonical, strictly increasing, hence duplicate-free.
            assert!(diagrams.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn enumerate_cap() {
        let limits = Limits::default();
        assert!(matches!(
            enumerate_matchings(9, &limits),
            Err(Error::CapExceeded { n: 9, cap: 8, .. })
        ));
        assert!(matches!(
            enumerate_matchings(0, &limits),
            Err(Error::InvalidArgument(_))
        ));
        assert!(crossing_census(9, &limits).is_err());
    }

    #[test]
    fn crossing_counts() {
        assert_eq!(diagram("1-2,3-4").crossing_count(), 0);
        assert_eq!(diagram("1-3,2-4").crossing_count(), 1);
        assert_eq!(diagram("1-5,2-6,3-8,4-7").crossing_count(), 5);
        // The most saturated diagram {(i, i+n)} has all pairs crossing.
        let saturated = diagram("1-5,2-6,3-7,4-8");
        assert_eq!(saturated.crossing_count(), 6);
    }

    #[test]
    fn crossing_graphs() {
        let g = diagram("1-2,3-4").crossing_graph();
        assert_eq!((g.n(), g.edge_count()), (2, 0));

        let g = diagram("1-4,2-5,3-6").crossing_graph();
        assert_eq!(g.edges(), &[(1, 2), (1, 3), (2, 3)]);
        assert_eq!(g, CrossingGraph::complete(3));

        let g = diagram("1-5,2-6,3-8,4-7").crossing_graph();
        assert_eq!(g.edges(), &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]);
        assert_eq!(g.edge_count(), diagram("1-5,2-6,3-8,4-7").crossing_count());
    }

    #[test]
    fn census_matches_known_rows() {
        let limits = Limits::default();
        let c2 = crossing_census(2, &limits).unwrap();
        assert_eq!(c2, BTreeMap::from([(0, 2), (1, 1)]));
        let c4 = crossing_census(4, &limits).unwrap();
        assert_eq!(
            c4,
            BTreeMap::from([(0, 14), (1, 28), (2, 28), (3, 20), (4, 10), (5, 4), (6, 1)])
        );
        for n in 1..=5 {
            let census = crossing_census(n, &limits).unwrap();
            assert_eq!(census.values().sum::<u64>(), double_factorial_odd(n));
            assert_eq!(census[&(n * (n - 1) / 2)], 1);
        }
    }

    #[test]
    fn admissible_patterns() {
        let limits = Limits::default();
        let single = FieldPattern::new(vec![FieldKind::Parafermi, FieldKind::ParafermiConjugate])
            .unwrap();
        assert_eq!(admissible_matchings(&single, &limits).unwrap(), vec![diagram("1-2")]);

        let bose = FieldPattern::parabose(4).unwrap();
        assert_eq!(admissible_matchings(&bose, &limits).unwrap().len(), 3);

        let alternating = FieldPattern::parafermi_alternating(4).unwrap();
        assert_eq!(
            admissible_matchings(&alternating, &limits).unwrap(),
            vec![diagram("1-2,3-4"), diagram("1-4,2-3")]
        );

        // n! admissible matchings for any balanced pattern.
        let blocked = FieldPattern::new(vec![
            FieldKind::Parafermi,
            FieldKind::Parafermi,
            FieldKind::Parafermi,
            FieldKind::ParafermiConjugate,
            FieldKind::ParafermiConjugate,
            FieldKind::ParafermiConjugate,
        ])
        .unwrap();
        assert_eq!(admissible_matchings(&blocked, &limits).unwrap().len(), 6);
    }

    #[test]
    fn invalid_patterns() {
        assert!(FieldPattern::new(vec![]).is_err());
        assert!(FieldPattern::parabose(3).is_err());
        assert!(FieldPattern::new(vec![
            FieldKind::NeutralParabose,
            FieldKind::Parafermi,
            FieldKind::ParafermiConjugate,
            FieldKind::NeutralParabose,
        ])
        .is_err());
        assert!(FieldPattern::new(vec![
            FieldKind::Parafermi,
            FieldKind::Parafermi,
        ])
        .is_err());
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["1-2", "1-3,2-4", "1-5,2-6,3-8,4-7"] {
            assert_eq!(diagram(s).to_string(), s);
        }
        // Normalization: orientation and chord order.
        assert_eq!("4-2,3-1".parse::<ChordDiagram>().unwrap().to_string(), "1-3,2-4");
    }

    #[test]
    fn parse_rejects_malformed_input() {
        for bad in ["", "1-2,2-3", "1-2,3-5", "1-1", "0-1", "1-2,3", "a-b", "1-2,"] {
            assert!(
                bad.parse::<ChordDiagram>().is_err(),
                "`{bad}` should be rejected"
            );
        }
    }

    #[test]
    fn canonical_form_identifies_isomorphic_graphs() {
        let figures = [
            "1-5,2-6,3-8,4-7",
            "1-4,2-6,3-7,5-8",
            "1-5,2-7,3-6,4-8",
            "1-6,2-5,3-7,4-8",
        ];
        let canonical = diagram(figures[0]).crossing_graph().canonical_form();
        for f in &figures[1..] {
            let g = diagram(f).crossing_graph();
            assert_eq!(g.canonical_form(), canonical);
            assert!(g.is_isomorphic_to(&diagram(figures[0]).crossing_graph()));
        }
        // Different crossing numbers can never be isomorphic.
        assert!(!diagram("1-3,2-4")
            .crossing_graph()
            .is_isomorphic_to(&CrossingGraph::edgeless(2)));
    }

    #[test]
    fn relabeling_is_a_graph_isomorphism() {
        let g = diagram("1-5,2-6,3-8,4-7").crossing_graph();
        let h = g.relabeled(&[3, 1, 4, 2]);
        assert_eq!(h.edge_count(), g.edge_count());
        assert!(h.is_isomorphic_to(&g));
    }
}
