//! Text export of group presentations.

use std::fmt::Write;

use crate::affine_cactus::{
    circular_alphabet, classic_relations, defining_relations, generators, SubsetGraph,
};
use crate::coxeter_cactus::CoxeterDiagram;
use crate::error::Result;
use crate::racg::FiniteAlphabet;

/// Generators with display labels and identifier-safe names; relations as index words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub labels: Vec<String>,
    pub idents: Vec<String>,
    pub relations: Vec<(Vec<usize>, Vec<usize>)>,
}

/// The groups whose presentations can be exported.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    /// Affine cactus group.
    Ajn,
    /// Right-angled Coxeter group on circular sets.
    Adn,
    /// Classical cactus group.
    Jn,
    /// Right-angled Coxeter group on subsets.
    Dn,
    /// Cactus group of the `n`-cycle Coxeter diagram.
    CoxeterCactus,
}

fn ident(prefix: &str, parts: &[usize]) -> String {
    let body: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
    format!("{prefix}{}", body.join("_"))
}

impl Presentation {
    pub fn build(kind: Kind, n: usize, min_size: usize) -> Result<Presentation> {
        match kind {
            Kind::Ajn => {
                let gens = generators(n);
                let index = |l: &crate::CactusLetter| gens.iter().position(|g| g == l).expect("generator");
                let relations = defining_relations(n)?
                    .into_iter()
                    .map(|(_, l, r)| {
                        (
                            l.letters().iter().map(index).collect(),
                            r.letters().iter().map(index).collect(),
                        )
                    })
                    .collect();
                crate::perm::check_n(n, 2)?;
                Ok(Presentation {
                    labels: gens.iter().map(|g| g.to_string()).collect(),
                    idents: gens.iter().map(|g| ident("s", &[g.i, g.j])).collect(),
                    relations,
                })
            }
            Kind::Jn => {
                let rels = classic_relations(n)?;
                let gens: Vec<(usize, usize)> =
                    (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
                let index = |l: &(usize, usize)| gens.iter().position(|g| g == l).expect("generator");
                Ok(Presentation {
                    labels: gens.iter().map(|(i, j)| format!("s({i},{j})")).collect(),
                    idents: gens.iter().map(|&(i, j)| ident("s", &[i, j])).collect(),
                    relations: rels
                        .into_iter()
                        .map(|(_, l, r)| {
                            (
                                l.letters().iter().map(index).collect(),
                                r.letters().iter().map(index).collect(),
                            )
                        })
                        .collect(),
                })
            }
            Kind::Adn => {
                let alpha = circular_alphabet(n, min_size)?;
                Ok(racg_presentation(
                    &alpha,
                    |c| format!("t{c}"),
                    |c| ident("t", c.seq()),
                ))
            }
            Kind::Dn => {
                let alpha = SubsetGraph { n }.alphabet(min_size)?;
                Ok(racg_presentation(
                    &alpha,
                    |s| {
                        let body: Vec<String> = s.iter().map(|p| p.to_string()).collect();
                        format!("d{{{}}}", body.join(","))
                    },
                    |s| ident("d", s),
                ))
            }
            Kind::CoxeterCactus => {
                let d = CoxeterDiagram::cycle(n)?;
                let gens = d.enumerate_irr_finite()?;
                let index =
                    |a: &crate::coxeter_cactus::Arc| gens.iter().position(|g| g == a).expect("generator");
                let relations = d
                    .relations()?
                    .into_iter()
                    .map(|r| {
                        (
                            r.lhs.iter().map(index).collect(),
                            r.rhs.iter().map(index).collect(),
                        )
                    })
                    .collect();
                Ok(Presentation {
                    labels: gens.iter().map(|a| d.arc_label(a)).collect(),
                    idents: gens
                        .iter()
                        .map(|a| ident("r", &d.arc_vertices(a).expect("enumerated arc")))
                        .collect(),
                    relations,
                })
            }
        }
    }

    /// `gen: <label>` lines followed by `rel: lhs = rhs` lines, `1` standing for the empty word.
    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        for g in &self.labels {
            writeln!(out, "gen: {g}").expect("write to string");
        }
        for (l, r) in &self.relations {
            writeln!(out, "rel: {} = {}", self.side(l), self.side(r)).expect("write to string");
        }
        out
    }

    fn side(&self, w: &[usize]) -> String {
        if w.is_empty() {
            "1".into()
        } else {
            w.iter()
                .map(|&k| self.labels[k].as_str())
                .collect::<Vec<_>>()
                .join(" ")
        }
    }

    /// GAP-style free group quotient: relators are `lhs * rhs^-1`.
    pub fn to_algebra(&self) -> String {
        let mut out = String::new();
        let names: Vec<String> = self.idents.iter().map(|g| format!("\"{g}\"")).collect();
        writeln!(out, "F := FreeGroup({});;", names.join(", ")).expect("write to string");
        writeln!(out, "AssignGeneratorVariables(F);;").expect("write to string");
        let relators: Vec<String> = self
            .relations
            .iter()
            .map(|(l, r)| {
                let mut factors: Vec<String> = l.iter().map(|&k| self.idents[k].clone()).collect();
                factors.extend(r.iter().rev().map(|&k| format!("{}^-1", self.idents[k])));
                factors.join("*")
            })
            .collect();
        writeln!(out, "rels := [{}];;", relators.join(", ")).expect("write to string");
        writeln!(out, "G := F / rels;;").expect("write to string");
        out
    }
}

fn racg_presentation<L: Clone + Eq + std::hash::Hash + Ord + std::fmt::Debug>(
    alpha: &FiniteAlphabet<L>,
    label: impl Fn(&L) -> String,
    name: impl Fn(&L) -> String,
) -> Presentation {
    let relations = alpha
        .relators()
        .into_iter()
        .map(|w| {
            let idx: Vec<usize> = w.iter().map(|l| alpha.position(l).expect("letter")).collect();
            if idx.len() == 2 {
                (idx, vec![])
            } else {
                (idx[..2].to_vec(), vec![idx[1], idx[0]])
            }
        })
        .collect();
    Presentation {
        labels: alpha.letters().iter().map(label).collect(),
        idents: alpha.letters().iter().map(name).collect(),
        relations,
    }
}
