use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::Presentation;

/// Abelian group Z/d₁ ⊕ … ⊕ Z/d_k ⊕ Z^r with d₁ | d₂ | … and every dᵢ ≥ 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianInvariants {
    pub torsion: Vec<BigUint>,
    pub free_rank: usize,
}

impl AbelianInvariants {
    pub fn new(torsion: &[u64], free_rank: usize) -> Self {
        AbelianInvariants { torsion: torsion.iter().map(|&d| BigUint::from(d)).collect(), free_rank }
    }

    /// Direct sum, with the torsion part renormalised to a divisibility chain.
    pub fn direct_sum(&self, other: &AbelianInvariants) -> AbelianInvariants {
        let diag: Vec<BigInt> = self.torsion.iter().chain(&other.torsion).map(|d| BigInt::from(d.clone())).collect();
        let mut out = invariants_from_diagonal(diag, 0);
        out.free_rank = self.free_rank + other.free_rank;
        out
    }

    pub fn has_divisibility_chain(&self) -> bool {
        self.torsion.iter().all(|d| *d >= BigUint::from(2u8))
            && self.torsion.windows(2).all(|w| (&w[1] % &w[0]).is_zero())
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z/{d}")).collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

impl Serialize for AbelianInvariants {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Abelianization of a presented group: Smith normal form of the relator
/// exponent-sum matrix. Rows with equal exponent vectors are merged first.
pub fn abelianization(p: &Presentation) -> AbelianInvariants {
    let mut rows: Vec<Vec<i64>> = p
        .relators
        .iter()
        .map(|r| {
            let mut row = vec![0i64; p.generator_count];
            for l in r {
                row[l.gen] += if l.inverse { -1 } else { 1 };
            }
            row
        })
        .filter(|row| row.iter().any(|&x| x != 0))
        .collect();
    rows.sort();
    rows.dedup();
    let matrix: Vec<Vec<BigInt>> = rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
    smith_invariants(matrix, p.generator_count)
}

/// Invariants of Z^cols / rowspace(matrix).
pub fn smith_invariants(matrix: Vec<Vec<BigInt>>, cols: usize) -> AbelianInvariants {
    let diag = smith_diagonal(matrix, cols);
    let rank = diag.len();
    invariants_from_diagonal(diag, cols - rank)
}

fn invariants_from_diagonal(diag: Vec<BigInt>, free_rank: usize) -> AbelianInvariants {
    // a diagonal matrix is already in Smith form once entries are made into a
    // divisibility chain: replace (x, y) by (gcd, lcm) pairwise
    let mut d: Vec<BigInt> = diag.into_iter().map(|x| x.abs()).filter(|x| !x.is_zero()).collect();
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
    let torsion = d
        .into_iter()
        .filter(|x| !x.is_one())
        .map(|x| x.to_biguint().expect("non-negative"))
        .collect();
    AbelianInvariants { torsion, free_rank }
}

/// Nonzero diagonal of a Smith normal form, via unimodular row and column
/// operations over exact integers.
fn smith_diagonal(mut a: Vec<Vec<BigInt>>, cols: usize) -> Vec<BigInt> {
    let rows = a.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows && t < cols {
        // pivot: smallest nonzero absolute value in the trailing block
        let mut pivot: Option<(usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, x) in row.iter().enumerate().skip(t) {
                if !x.is_zero() && pivot.is_none_or(|(pi, pj)| x.abs() < a[pi][pj].abs()) {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..cols {
                    let v = &a[t][j] * &q;
                    a[i][j] -= v;
                }
                if !a[i][t].is_zero() {
                    // remainder is smaller than the pivot: make it the pivot
                    a.swap(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let v = &row[t] * &q;
                    row[j] -= v;
                }
                if !a[t][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // pivot must divide the remaining block
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
            match offender {
                Some(i) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}
