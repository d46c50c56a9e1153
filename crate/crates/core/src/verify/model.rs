//! Explicit normal forms in G ∗ F_r, used as an independent model of the
//! groups presented by the constructed systems.

use crate::group::{FiniteGroup, GenPartition};
use crate::letter::{Alphabet, Klass, Sym};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Syllable {
    /// A non-identity element of the finite factor.
    Finite(u32),
    /// A free generator, or its inverse when the flag is set.
    Free(u32, bool),
}

/// An element of G ∗ F_r in reduced form: no two adjacent finite
/// syllables and no adjacent cancelling free letters.
pub type Element = Vec<Syllable>;

#[derive(Clone, Debug)]
pub struct FreeProductModel {
    group: FiniteGroup,
    rank: usize,
}

impl FreeProductModel {
    pub fn new(group: FiniteGroup, rank: usize) -> Self {
        FreeProductModel { group, rank }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn finite(&self, g: usize) -> Element {
        let mut w = Vec::new();
        self.push(&mut w, Syllable::Finite(g as u32));
        w
    }

    pub fn free(&self, i: usize) -> Element {
        assert!(i < self.rank, "free generator {i} out of range");
        vec![Syllable::Free(i as u32, false)]
    }

    /// Appends one syllable, reducing.
    pub fn push(&self, w: &mut Element, s: Syllable) {
        match (w.last().copied(), s) {
            (_, Syllable::Finite(g)) if g as usize == self.group.identity() => {}
            (Some(Syllable::Finite(g)), Syllable::Finite(h)) => {
                w.pop();
                let p = self.group.mul(g as usize, h as usize);
                if p != self.group.identity() {
                    w.push(Syllable::Finite(p as u32));
                }
            }
            (Some(Syllable::Free(i, a)), Syllable::Free(j, b)) if i == j && a != b => {
                w.pop();
            }
            _ => w.push(s),
        }
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        let mut w = a.clone();
        for &s in b {
            self.push(&mut w, s);
        }
        w
    }

    pub fn inverse(&self, a: &Element) -> Element {
        a.iter()
            .rev()
            .map(|s| match *s {
                Syllable::Finite(g) => Syllable::Finite(self.group.inv(g as usize) as u32),
                Syllable::Free(i, inv) => Syllable::Free(i, !inv),
            })
            .collect()
    }

    pub fn product<'a>(&self, parts: impl IntoIterator<Item = &'a Element>) -> Element {
        parts.into_iter().fold(Vec::new(), |acc, p| self.mul(&acc, p))
    }
}

/// Images of the subdivided letters in G ∗ F_{n|Σ|}.
///
/// Each generator gets its own free letters: n for an involution y
/// (a_{i,j} ↦ f_j for j ≤ n, a_{i,n+1} ↦ (f_1⋯f_n)⁻¹ y (f_1⋯f_n), and
/// a_{i,j} ↦ f_{2n+2-j}⁻¹ beyond the middle) and 2n for an inverse pair x,
/// x⁻¹ (b_{i,j} ↦ f_j off the middle, b_{i,n+1} ↦ (f_1⋯f_n)⁻¹ x
/// (f_{n+2}⋯f_{2n+1})⁻¹, c_{i,j} ↦ b_{i,j}⁻¹). The letters along every
/// subdivided edge then multiply to the label of the original edge.
///
/// Returns the model and the image of every letter of `alphabet`, by
/// symbol.
pub fn nabla_images(
    g: &FiniteGroup,
    part: &GenPartition,
    n: usize,
    alphabet: &Alphabet,
) -> (FreeProductModel, Vec<Element>) {
    let rank = n * (part.m1() + 2 * part.m2());
    let model = FreeProductModel::new(g.clone(), rank);
    let span = 2 * n + 1;
    let mut next = 0usize;
    let mut take = |count: usize| {
        let ids: Vec<usize> = (next..next + count).collect();
        next += count;
        ids
    };
    let mut a_images: Vec<Vec<Element>> = Vec::new();
    for &y in &part.sigma1 {
        let f: Vec<Element> = take(n).into_iter().map(|i| model.free(i)).collect();
        let prefix = model.product(&f);
        let mut row = vec![Vec::new(); span];
        for j in 0..n {
            row[j] = f[j].clone();
            row[span - 1 - j] = model.inverse(&f[j]);
        }
        row[n] = model.product([&model.inverse(&prefix), &model.finite(y), &prefix]);
        a_images.push(row);
    }
    let mut b_images: Vec<Vec<Element>> = Vec::new();
    for &x in &part.sigma2 {
        let f: Vec<Element> = take(2 * n).into_iter().map(|i| model.free(i)).collect();
        let (head, tail) = f.split_at(n);
        let mut row: Vec<Element> = head.to_vec();
        let middle = model.product([
            &model.inverse(&model.product(head)),
            &model.finite(x),
            &model.inverse(&model.product(tail)),
        ]);
        row.push(middle);
        row.extend(tail.iter().cloned());
        b_images.push(row);
    }
    let images = alphabet
        .letters()
        .iter()
        .map(|l| {
            let (i, j) = (l.i as usize - 1, l.j as usize - 1);
            match l.klass {
                Klass::A => a_images[i][j].clone(),
                Klass::B => b_images[i][j].clone(),
                Klass::C => model.inverse(&b_images[i][j]),
            }
        })
        .collect();
    (model, images)
}

/// Images of the letters of a free-reduction system in F_k: b_{i,1} ↦ f_i
/// and c_{i,1} ↦ f_i⁻¹.
pub fn free_images(k: usize, alphabet: &Alphabet) -> (FreeProductModel, Vec<Element>) {
    let model = FreeProductModel::new(FiniteGroup::cyclic(1), k);
    let images = alphabet
        .letters()
        .iter()
        .map(|l| {
            let f = model.free(l.i as usize - 1);
            if l.klass == Klass::C {
                model.inverse(&f)
            } else {
                f
            }
        })
        .collect();
    (model, images)
}

/// Evaluates a word of symbols.
pub fn evaluate(model: &FreeProductModel, images: &[Element], word: &[Sym]) -> Element {
    model.product(word.iter().map(|&s| &images[s as usize]))
}
