//! Simply-laced Coxeter diagrams, their finite irreducible parabolic subsets, and the cactus
//! groups built from them.
//!
//! For the cycle with `n` vertices the cactus group is `AJ_n`: the arc `{ρ_i, …, ρ_{i+k-1}}`
//! corresponds to the generator `σ_{i,i+k}`, since `ρ_m` exchanges strands `m` and `m+1`.

use std::collections::BTreeSet;
use std::fmt;

use crate::affine_cactus::{defining_relations, CactusLetter, RelationKind};
use crate::error::{Error, Result};
use crate::perm::{check_n, wrap};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shape {
    /// Type `A`: vertices `1..n` in a row.
    Path,
    /// Type `Ã`: the row closed up by an edge between `n` and `1`.
    Cycle,
    /// Any other simple graph; supported only by [`CoxeterDiagram::omega_action`].
    General,
}

/// A Coxeter diagram with vertices `1..=n`; an edge means braid label 3, a non-edge label 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterDiagram {
    n: usize,
    shape: Shape,
    adj: Vec<Vec<bool>>,
}

/// A connected run of vertices `start, start+1, …` of length `len`, read around the cycle if needed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    pub start: usize,
    pub len: usize,
}

impl CoxeterDiagram {
    pub fn path(n: usize) -> Result<Self> {
        check_n(n, 1)?;
        let edges: Vec<_> = (1..n).map(|m| (m, m + 1)).collect();
        Ok(CoxeterDiagram::build(n, Shape::Path, &edges))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Diagram(format!(
                "a cycle needs at least 3 vertices, got {n}"
            )));
        }
        let edges: Vec<_> = (1..=n).map(|m| (m, m % n + 1)).collect();
        Ok(CoxeterDiagram::build(n, Shape::Cycle, &edges))
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_n(n, 1)?;
        for &(a, b) in edges {
            if a == b || a == 0 || b == 0 || a > n || b > n {
                return Err(Error::Diagram(format!("bad edge ({a},{b})")));
            }
        }
        Ok(CoxeterDiagram::build(n, Shape::General, edges))
    }

    fn build(n: usize, shape: Shape, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![vec![false; n + 1]; n + 1];
        for &(a, b) in edges {
            adj[a][b] = true;
            adj[b][a] = true;
        }
        CoxeterDiagram { n, shape, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a][b]
    }

    fn check_arc(&self, arc: &Arc) -> Result<()> {
        let ok = match self.shape {
            Shape::Path => arc.start >= 1 && arc.len >= 1 && arc.start + arc.len - 1 <= self.n,
            Shape::Cycle => arc.start >= 1 && arc.start <= self.n && arc.len >= 1 && arc.len < self.n,
            Shape::General => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Diagram(format!(
                "{arc:?} is not a proper arc of this diagram"
            )))
        }
    }

    /// Vertices of an arc in the order they are traversed.
    pub fn arc_vertices(&self, arc: &Arc) -> Result<Vec<usize>> {
        self.check_arc(arc)?;
        Ok((0..arc.len)
            .map(|t| wrap((arc.start + t) as i64, self.n))
            .collect())
    }

    /// The arc with the given vertex set, if there is one.
    pub fn arc_of(&self, vertices: &[usize]) -> Option<Arc> {
        let set: BTreeSet<usize> = vertices.iter().copied().collect();
        let len = set.len();
        set.iter().find_map(|&start| {
            let arc = Arc { start, len };
            match self.arc_vertices(&arc) {
                Ok(vs) if vs.iter().all(|v| set.contains(v)) => Some(arc),
                _ => None,
            }
        })
    }

    /// Connected vertex subsets spanning a path: every sub-run of a path, every proper arc of a cycle.
    ///
    /// ```
    /// use cactus::coxeter_cactus::CoxeterDiagram;
    /// assert_eq!(CoxeterDiagram::cycle(3).unwrap().enumerate_irr_finite().unwrap().len(), 6);
    /// assert_eq!(CoxeterDiagram::path(3).unwrap().enumerate_irr_finite().unwrap().len(), 6);
    /// ```
    pub fn enumerate_irr_finite(&self) -> Result<Vec<Arc>> {
        let mut out = Vec::new();
        match self.shape {
            Shape::Path => {
                for len in 1..=self.n {
                    for start in 1..=self.n + 1 - len {
                        out.push(Arc { start, len });
                    }
                }
            }
            Shape::Cycle => {
                for len in 1..self.n {
                    for start in 1..=self.n {
                        out.push(Arc { start, len });
                    }
                }
            }
            Shape::General => return Err(Error::Diagram("only paths and cycles are supported".into())),
        }
        Ok(out)
    }

    /// Connected components of the induced subgraph on `vertices`, each listed from one end to
    /// the other. Fails if a component is not a path.
    fn path_components(&self, vertices: &BTreeSet<usize>) -> Result<Vec<Vec<usize>>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &v in vertices {
            if seen.contains(&v) {
                continue;
            }
            let mut comp = vec![v];
            let mut stack = vec![v];
            seen.insert(v);
            while let Some(a) = stack.pop() {
                for &b in vertices {
                    if self.adj[a][b] && seen.insert(b) {
                        comp.push(b);
                        stack.push(b);
                    }
                }
            }
            let degree = |a: usize| comp.iter().filter(|&&b| self.adj[a][b]).count();
            let edges: usize = comp.iter().map(|&a| degree(a)).sum::<usize>() / 2;
            if edges + 1 != comp.len() || comp.iter().any(|&a| degree(a) > 2) {
                return Err(Error::Diagram(format!("component {comp:?} is not of type A")));
            }
            let start = *comp
                .iter()
                .filter(|&&a| degree(a) <= 1)
                .min()
                .expect("paths have ends");
            let mut ordered = vec![start];
            while ordered.len() < comp.len() {
                let last = *ordered.last().expect("nonempty");
                let next = comp
                    .iter()
                    .copied()
                    .find(|&b| self.adj[last][b] && !ordered.contains(&b))
                    .expect("path continues");
                ordered.push(next);
            }
            out.push(ordered);
        }
        Ok(out)
    }

    /// Conjugation by the longest element of the parabolic on `j`: each component of `j` is
    /// mirrored end to end. `i` must lie inside `j` or be disjoint from it.
    ///
    /// ```
    /// use cactus::coxeter_cactus::CoxeterDiagram;
    /// let d = CoxeterDiagram::path(4).unwrap();
    /// assert_eq!(d.omega_action(&[1, 2, 3], &[1]).unwrap(), vec![3]);
    /// ```
    pub fn omega_action(&self, j: &[usize], i: &[usize]) -> Result<Vec<usize>> {
        let jset: BTreeSet<usize> = j.iter().copied().collect();
        if jset.iter().chain(i).any(|&v| v == 0 || v > self.n) {
            return Err(Error::Diagram("vertex out of range".into()));
        }
        let inside = i.iter().filter(|v| jset.contains(v)).count();
        if inside == 0 {
            let mut out = i.to_vec();
            out.sort_unstable();
            return Ok(out);
        }
        if inside != i.len() {
            return Err(Error::Diagram(format!("{i:?} straddles {j:?}")));
        }
        let comps = self.path_components(&jset)?;
        let mut out: Vec<usize> = i
            .iter()
            .map(|v| {
                let comp = comps.iter().find(|c| c.contains(v)).expect("v lies in j");
                let t = comp.iter().position(|x| x == v).expect("v in comp");
                comp[comp.len() - 1 - t]
            })
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    /// `ω_J(I)` for arcs.
    pub fn omega_arc(&self, j: &Arc, i: &Arc) -> Result<Arc> {
        let image = self.omega_action(&self.arc_vertices(j)?, &self.arc_vertices(i)?)?;
        self.arc_of(&image)
            .ok_or_else(|| Error::Diagram(format!("image {image:?} is not an arc")))
    }

    fn arc_set(&self, a: &Arc) -> Result<BTreeSet<usize>> {
        Ok(self.arc_vertices(a)?.into_iter().collect())
    }

    /// The parabolic on `I ∪ J` is the direct product of those on `I` and `J`: the arcs are
    /// disjoint and no edge joins them.
    pub fn product_condition(&self, i: &Arc, j: &Arc) -> Result<bool> {
        let (a, b) = (self.arc_set(i)?, self.arc_set(j)?);
        Ok(a.is_disjoint(&b) && a.iter().all(|&x| b.iter().all(|&y| !self.adj[x][y])))
    }

    pub fn proper_subarc(&self, i: &Arc, j: &Arc) -> Result<bool> {
        let (a, b) = (self.arc_set(i)?, self.arc_set(j)?);
        Ok(a != b && a.is_subset(&b))
    }

    /// Relations of the cactus group: involutions, commutations for pairs satisfying the product
    /// condition (each unordered pair once), and `σ_Iσ_J = σ_Jσ_{ω_J(I)}` for `I ⊊ J`.
    pub fn relations(&self) -> Result<Vec<ArcRelation>> {
        let gens = self.enumerate_irr_finite()?;
        let mut out = Vec::new();
        for &g in &gens {
            out.push(ArcRelation {
                kind: RelationKind::Involution,
                lhs: vec![g, g],
                rhs: vec![],
            });
        }
        for (a, &x) in gens.iter().enumerate() {
            for &y in &gens[a + 1..] {
                if self.product_condition(&x, &y)? {
                    out.push(ArcRelation {
                        kind: RelationKind::Commutation,
                        lhs: vec![x, y],
                        rhs: vec![y, x],
                    });
                }
            }
        }
        for &x in &gens {
            for &y in &gens {
                if self.proper_subarc(&x, &y)? {
                    out.push(ArcRelation {
                        kind: RelationKind::Nested,
                        lhs: vec![x, y],
                        rhs: vec![y, self.omega_arc(&y, &x)?],
                    });
                }
            }
        }
        Ok(out)
    }

    pub fn arc_label(&self, a: &Arc) -> String {
        let vs = self.arc_vertices(a).unwrap_or_default();
        let body: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
        format!("r({})", body.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArcRelation {
    pub kind: RelationKind,
    pub lhs: Vec<Arc>,
    pub rhs: Vec<Arc>,
}

/// Outcome of matching the cycle's cactus relations against those of `AJ_n`.
#[derive(Debug, Clone)]
pub struct IsoReport {
    pub n: usize,
    /// The generator bijection.
    pub table: Vec<(Arc, CactusLetter)>,
    pub matched: usize,
    /// Relations of the diagram side with no counterpart, rendered in cactus letters.
    pub unmatched_diagram: Vec<String>,
    /// Relations of `AJ_n` with no counterpart.
    pub unmatched_cactus: Vec<String>,
}

impl IsoReport {
    pub fn passed(&self) -> bool {
        self.unmatched_diagram.is_empty()
            && self.unmatched_cactus.is_empty()
            && self.table.len() == self.n * (self.n - 1)
    }
}

impl fmt::Display for IsoReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (arc, letter) in &self.table {
            let vs: Vec<String> = (0..arc.len)
                .map(|t| wrap((arc.start + t) as i64, self.n).to_string())
                .collect();
            writeln!(f, "r({}) <-> {letter}", vs.join(","))?;
        }
        write!(f, "{} relations matched", self.matched)?;
        for r in &self.unmatched_diagram {
            write!(f, "\nunmatched diagram relation: {r}")?;
        }
        for r in &self.unmatched_cactus {
            write!(f, "\nunmatched cactus relation: {r}")?;
        }
        Ok(())
    }
}

type RelationKey = (RelationKind, Vec<CactusLetter>, Vec<CactusLetter>);

fn key(kind: RelationKind, lhs: Vec<CactusLetter>, rhs: Vec<CactusLetter>) -> RelationKey {
    if kind == RelationKind::Commutation {
        // a commutation is the same relation whichever side is written first
        let (a, b) = if lhs <= rhs { (lhs, rhs) } else { (rhs, lhs) };
        (kind, a, b)
    } else {
        (kind, lhs, rhs)
    }
}

fn render(k: &RelationKey) -> String {
    let side = |ls: &[CactusLetter]| {
        if ls.is_empty() {
            "1".to_string()
        } else {
            ls.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
        }
    };
    format!("{} = {}", side(&k.1), side(&k.2))
}

/// Checks that arc `{ρ_i, …, ρ_{i+k-1}}` ↦ `σ_{i,i+k}` carries the cactus relations of the
/// `n`-cycle exactly onto the defining relations of `AJ_n`.
///
/// ```
/// assert!(cactus::coxeter_cactus::iso_check(4).unwrap().passed());
/// ```
pub fn iso_check(n: usize) -> Result<IsoReport> {
    let d = CoxeterDiagram::cycle(n)?;
    let to_letter = |a: &Arc| CactusLetter::new(a.start, wrap((a.start + a.len) as i64, n));
    let table: Vec<(Arc, CactusLetter)> = d
        .enumerate_irr_finite()?
        .iter()
        .map(|a| (*a, to_letter(a)))
        .collect();
    let images: BTreeSet<CactusLetter> = table.iter().map(|(_, l)| *l).collect();
    let lhs: BTreeSet<RelationKey> = d
        .relations()?
        .into_iter()
        .map(|r| {
            key(
                r.kind,
                r.lhs.iter().map(to_letter).collect(),
                r.rhs.iter().map(to_letter).collect(),
            )
        })
        .collect();
    let rhs: BTreeSet<RelationKey> = defining_relations(n)?
        .into_iter()
        .map(|(kind, l, r)| key(kind, l.letters().to_vec(), r.letters().to_vec()))
        .collect();
    let mut table = table;
    if images.len() != table.len() {
        table.clear();
    }
    Ok(IsoReport {
        n,
        matched: lhs.intersection(&rhs).count(),
        unmatched_diagram: lhs.difference(&rhs).map(render).collect(),
        unmatched_cactus: rhs.difference(&lhs).map(render).collect(),
        table,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration() {
        assert_eq!(
            CoxeterDiagram::cycle(3)
                .unwrap()
                .enumerate_irr_finite()
                .unwrap()
                .len(),
            6
        );
        assert_eq!(
            CoxeterDiagram::path(3)
                .unwrap()
                .enumerate_irr_finite()
                .unwrap()
                .len(),
            6
        );
        assert!(CoxeterDiagram::cycle(2).is_err());
        for n in 3..=8 {
            let d = CoxeterDiagram::cycle(n).unwrap();
            assert_eq!(d.enumerate_irr_finite().unwrap().len(), n * (n - 1));
        }
    }

    #[test]
    fn omega_examples() {
        let p = CoxeterDiagram::path(3).unwrap();
        assert_eq!(p.omega_action(&[1, 2, 3], &[1]).unwrap(), vec![3]);
        assert_eq!(p.omega_action(&[1, 2, 3], &[1, 2, 3]).unwrap(), vec![1, 2, 3]);
        assert_eq!(p.omega_action(&[1, 2], &[3]).unwrap(), vec![3]);
        assert!(p.omega_action(&[1, 2], &[2, 3]).is_err());

        // a path 1-2-3-4 next to a hexagon 5..10
        let mut edges = vec![(1, 2), (2, 3), (3, 4)];
        edges.extend((5..=10).map(|v| (v, if v == 10 { 5 } else { v + 1 })));
        let g = CoxeterDiagram::from_edges(10, &edges).unwrap();
        let j = [2, 3, 4, 6, 7];
        assert_eq!(g.omega_action(&j, &[2]).unwrap(), vec![4]);
        assert_eq!(g.omega_action(&j, &[3]).unwrap(), vec![3]);
        assert_eq!(g.omega_action(&j, &[6]).unwrap(), vec![7]);
        assert_eq!(g.omega_action(&j, &[2, 6]).unwrap(), vec![4, 7]);
        assert!(g.omega_action(&[5, 6, 7, 8, 9, 10], &[5]).is_err());
    }

    #[test]
    fn product_condition_examples() {
        let c = CoxeterDiagram::cycle(4).unwrap();
        let a = |start| Arc { start, len: 1 };
        assert!(c.product_condition(&a(1), &a(3)).unwrap());
        assert!(!c.product_condition(&a(1), &a(2)).unwrap());
        assert!(!c.product_condition(&a(1), &a(4)).unwrap());
        assert!(!c.product_condition(&a(2), &a(2)).unwrap());
    }

    #[test]
    fn presentation_shapes() {
        let p = CoxeterDiagram::path(2).unwrap();
        let rels = p.relations().unwrap();
        assert_eq!(p.enumerate_irr_finite().unwrap().len(), 3);
        let whole = Arc { start: 1, len: 2 };
        assert!(rels.contains(&ArcRelation {
            kind: RelationKind::Nested,
            lhs: vec![Arc { start: 1, len: 1 }, whole],
            rhs: vec![whole, Arc { start: 2, len: 1 }],
        }));
        for n in 3..=6 {
            let c = CoxeterDiagram::cycle(n).unwrap();
            let rels = c.relations().unwrap();
            assert_eq!(rels.len(), defining_relations(n).unwrap().len());
            for r in &rels {
                assert_eq!(r.lhs.len(), if r.rhs.is_empty() { 2 } else { r.rhs.len() });
            }
        }
    }

    #[test]
    fn iso() {
        for n in 3..=6 {
            let r = iso_check(n).unwrap();
            assert!(r.passed(), "{r}");
        }
        let r = iso_check(3).unwrap();
        assert_eq!(r.table.len(), 6);
        assert!(r
            .table
            .contains(&(Arc { start: 2, len: 1 }, CactusLetter::new(2, 3))));
        assert!(r
            .table
            .contains(&(Arc { start: 3, len: 1 }, CactusLetter::new(3, 1))));
    }
}
