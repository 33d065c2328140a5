use super::word::{CactusLetter, CactusWord, ClassicCactusWord};
use crate::error::Result;
use crate::perm::check_n;

/// The `n(n-1)` generators `σ_{i,j}`, ordered by `(i, j)`.
pub fn generators(n: usize) -> Vec<CactusLetter> {
    (1..=n)
        .flat_map(|i| {
            (1..=n)
                .filter(move |&j| j != i)
                .map(move |j| CactusLetter::new(i, j))
        })
        .collect()
}

/// Which family a defining relation belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelationKind {
    Involution,
    Commutation,
    Nested,
}

/// Every instance of the defining relations of `AJ_n` as `(lhs, rhs)`:
/// `σ² = 1`; `σ_{i,j}σ_{k,l} = σ_{k,l}σ_{i,j}` for disjoint supports (each unordered pair once);
/// `σ_{i,j}σ_{k,l} = σ_{k,l}σ_{s_{k,l}(j),s_{k,l}(i)}` for `[i,j]_c` properly nested in `[k,l]_c`.
pub fn defining_relations(n: usize) -> Result<Vec<(RelationKind, CactusWord, CactusWord)>> {
    check_n(n, 2)?;
    let gens = generators(n);
    let word = |ls: Vec<CactusLetter>| CactusWord::new(n, ls).expect("valid generators");
    let mut out = Vec::new();
    for &g in &gens {
        out.push((RelationKind::Involution, word(vec![g, g]), word(vec![])));
    }
    for (a, &x) in gens.iter().enumerate() {
        for &y in &gens[a + 1..] {
            if x.support(n).disjoint(&y.support(n))? {
                out.push((RelationKind::Commutation, word(vec![x, y]), word(vec![y, x])));
            }
        }
    }
    for &x in &gens {
        for &y in &gens {
            if x != y && x.support(n).csubset(&y.support(n))? {
                let x2 = x.conjugated_by(&y.reversal(n));
                out.push((RelationKind::Nested, word(vec![x, y]), word(vec![y, x2])));
            }
        }
    }
    Ok(out)
}

/// Defining relations of `J_n`, in the same three families.
pub fn classic_relations(n: usize) -> Result<Vec<(RelationKind, ClassicCactusWord, ClassicCactusWord)>> {
    check_n(n, 2)?;
    let gens: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    let word = |ls: Vec<(usize, usize)>| ClassicCactusWord::new(n, ls).expect("valid generators");
    let mut out = Vec::new();
    for &g in &gens {
        out.push((RelationKind::Involution, word(vec![g, g]), word(vec![])));
    }
    for (a, &(i, j)) in gens.iter().enumerate() {
        for &(k, l) in &gens[a + 1..] {
            if j < k || l < i {
                out.push((
                    RelationKind::Commutation,
                    word(vec![(i, j), (k, l)]),
                    word(vec![(k, l), (i, j)]),
                ));
            }
        }
    }
    for &(i, j) in &gens {
        for &(k, l) in &gens {
            if (i, j) != (k, l) && k <= i && j <= l {
                out.push((
                    RelationKind::Nested,
                    word(vec![(i, j), (k, l)]),
                    word(vec![(k, l), (k + l - j, k + l - i)]),
                ));
            }
        }
    }
    Ok(out)
}
