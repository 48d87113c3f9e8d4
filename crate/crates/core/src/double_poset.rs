//! Double posets: a finite set carrying two strict partial orders.
//!
//! The first order `<₁` drives ideals, linear extensions and the domain side
//! of pictures; the second order `<₂` drives composition and the target side
//! of pictures. Everything here works on concrete labelled representatives;
//! passing to isomorphism classes goes through [`canonicalize`].

use crate::canon::{canonicalize, CanonicalForm};
use crate::error::{Error, Result};
use crate::lr::Partition;
use crate::perm::Permutation;
use crate::poset::{ElementSet, Relation};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DoublePoset {
    r1: Relation,
    r2: Relation,
}

impl DoublePoset {
    pub fn new(r1: Relation, r2: Relation) -> Result<Self> {
        if r1.n() != r2.n() {
            return Err(Error::LengthMismatch {
                expected: r1.n(),
                actual: r2.n(),
            });
        }
        Ok(DoublePoset { r1, r2 })
    }

    /// Builds both orders from generating pairs, closing each transitively.
    pub fn from_pairs(n: usize, first: &[(usize, usize)], second: &[(usize, usize)]) -> Result<Self> {
        Self::new(Relation::new(n, first)?, Relation::new(n, second)?)
    }

    pub fn empty() -> Self {
        Self::antichain(0)
    }

    pub fn point() -> Self {
        Self::antichain(1)
    }

    /// `n` points with both orders empty.
    pub fn antichain(n: usize) -> Self {
        DoublePoset {
            r1: Relation::antichain(n),
            r2: Relation::antichain(n),
        }
    }

    pub fn n(&self) -> usize {
        self.r1.n()
    }

    pub fn first(&self) -> &Relation {
        &self.r1
    }

    pub fn second(&self) -> &Relation {
        &self.r2
    }

    pub fn canonicalize(&self) -> Result<(CanonicalForm, Vec<usize>)> {
        canonicalize(self)
    }

    pub fn canonical_form(&self) -> Result<CanonicalForm> {
        Ok(canonicalize(self)?.0)
    }

    pub fn is_isomorphic(&self, other: &DoublePoset) -> Result<bool> {
        Ok(self.n() == other.n() && self.canonical_form()? == other.canonical_form()?)
    }

    /// Renames element `i` to `new_index[i]` in both orders.
    pub fn relabel(&self, new_index: &[usize]) -> DoublePoset {
        DoublePoset {
            r1: self.r1.relabel(new_index),
            r2: self.r2.relabel(new_index),
        }
    }

    /// Restriction of both orders to `subset`, reindexed in ascending order.
    pub fn induced(&self, subset: ElementSet) -> Result<DoublePoset> {
        Ok(DoublePoset {
            r1: self.r1.induced(subset)?,
            r2: self.r2.induced(subset)?,
        })
    }

    /// The composition `EF`: disjoint union with `F` shifted by `|E|`, first
    /// orders side by side, and every element of `E` below every element of
    /// `F` in the second order.
    pub fn compose(&self, other: &DoublePoset) -> DoublePoset {
        let n = self.n();
        let m = other.n();
        let shift = |mask: u32| if n >= 32 { 0 } else { mask << n };
        let f_mask = crate::poset::full_mask(n + m) & !crate::poset::full_mask(n);
        let mut r1 = Vec::with_capacity(n + m);
        let mut r2 = Vec::with_capacity(n + m);
        for i in 0..n {
            r1.push(self.r1.succ_mask(i));
            r2.push(self.r2.succ_mask(i) | f_mask);
        }
        for i in 0..m {
            r1.push(shift(other.r1.succ_mask(i)));
            r2.push(shift(other.r2.succ_mask(i)));
        }
        DoublePoset {
            r1: Relation::from_masks(r1).expect("composition of strict orders is a strict order"),
            r2: Relation::from_masks(r2).expect("composition of strict orders is a strict order"),
        }
    }

    /// One `(I, S)` pair per decomposition of the first order, both sides
    /// carrying the restricted orders.
    pub fn decompose(&self) -> Vec<(DoublePoset, DoublePoset)> {
        self.r1
            .decompositions()
            .into_iter()
            .map(|(i, s)| {
                (
                    DoublePoset {
                        r1: self.r1.induced_unchecked(i),
                        r2: self.r2.induced_unchecked(i),
                    },
                    DoublePoset {
                        r1: self.r1.induced_unchecked(s),
                        r2: self.r2.induced_unchecked(s),
                    },
                )
            })
            .collect()
    }

    /// Both orders replaced by their opposites.
    pub fn tilde(&self) -> DoublePoset {
        DoublePoset {
            r1: self.r1.opposite(),
            r2: self.r2.opposite(),
        }
    }

    /// `P_σ`: second order natural, first order `σ(1)-1 <₁ σ(2)-1 <₁ …`.
    pub fn from_permutation(sigma: &Permutation) -> DoublePoset {
        let order: Vec<usize> = sigma.as_slice().iter().map(|&v| v - 1).collect();
        DoublePoset {
            r1: Relation::chain(&order).expect("a permutation lists each element once"),
            r2: Relation::natural(sigma.len()),
        }
    }

    /// `π_ν` on the Ferrers diagram of `nu`.
    ///
    /// Cells `(x, y)` with row `y` holding part `ν_{y+1}` are indexed row by
    /// row from `y = 0`. The first order is the product order on cells; the
    /// second reads higher rows first and each row left to right.
    pub fn pi_from_partition(nu: &Partition) -> DoublePoset {
        let cells = nu.cells();
        let n = cells.len();
        let mut r1 = vec![0u32; n];
        let mut r2 = vec![0u32; n];
        for (i, &(x, y)) in cells.iter().enumerate() {
            for (j, &(x2, y2)) in cells.iter().enumerate() {
                if i == j {
                    continue;
                }
                if x <= x2 && y <= y2 {
                    r1[i] |= 1 << j;
                }
                if y > y2 || (y == y2 && x < x2) {
                    r2[i] |= 1 << j;
                }
            }
        }
        DoublePoset {
            r1: Relation::from_masks(r1).expect("product order is a strict order"),
            r2: Relation::from_masks(r2).expect("row reading order is a strict order"),
        }
    }

    /// Second order total.
    pub fn is_special(&self) -> bool {
        self.r2.is_total()
    }

    /// Special, with the second order extending the first.
    pub fn is_naturally_labelled(&self) -> bool {
        self.is_special() && self.r1.is_subrelation_of(&self.r2)
    }

    /// The order isomorphism from the second order onto `1..=n`:
    /// `labelling()[e]` is the label of element `e`.
    pub fn labelling(&self) -> Result<Vec<usize>> {
        if !self.is_special() {
            return Err(Error::NotSpecial);
        }
        let n = self.n();
        Ok((0..n)
            .map(|e| n - self.r2.succ_mask(e).count_ones() as usize)
            .collect())
    }

    /// `x` is a π-partition: weakly increasing along `<₁`, strictly where
    /// `e <₁ e′` but `e′ <₂ e`.
    pub fn is_pi_partition<T: Ord>(&self, x: &[T]) -> bool {
        debug_assert_eq!(x.len(), self.n());
        for (e, xe) in x.iter().enumerate() {
            for f in ElementSet::from_mask(self.r1.succ_mask(e)).iter() {
                if *xe > x[f] || (*xe == x[f] && self.r2.less(f, e)) {
                    return false;
                }
            }
        }
        true
    }
}

/// Search over bijections `E → F` in lexicographic order of the image
/// vector, optionally requiring the inverse condition of a picture.
struct BijectionSearch<'a> {
    e: &'a DoublePoset,
    f: &'a DoublePoset,
    picture: bool,
    phi: Vec<usize>,
}

impl BijectionSearch<'_> {
    fn admissible(&self, x: usize, u: usize) -> bool {
        let (e, f) = (self.e, self.f);
        for (y, &v) in self.phi.iter().enumerate() {
            if e.r1.less(y, x) && !f.r2.less(v, u) {
                return false;
            }
            if e.r1.less(x, y) && !f.r2.less(u, v) {
                return false;
            }
            if self.picture {
                if f.r1.less(v, u) && !e.r2.less(y, x) {
                    return false;
                }
                if f.r1.less(u, v) && !e.r2.less(x, y) {
                    return false;
                }
            }
        }
        true
    }

    fn visit<F: FnMut(&[usize])>(&mut self, used: u32, emit: &mut F) {
        let x = self.phi.len();
        if x == self.e.n() {
            emit(&self.phi);
            return;
        }
        for u in 0..self.f.n() {
            if used & (1 << u) == 0 && self.admissible(x, u) {
                self.phi.push(u);
                self.visit(used | (1 << u), emit);
                self.phi.pop();
            }
        }
    }
}

fn for_each_bijection<F: FnMut(&[usize])>(e: &DoublePoset, f: &DoublePoset, picture: bool, mut emit: F) {
    if e.n() != f.n() {
        return;
    }
    let mut search = BijectionSearch {
        e,
        f,
        picture,
        phi: Vec::with_capacity(e.n()),
    };
    search.visit(0, &mut emit);
}

/// All pictures `E → F`, each as the image vector `φ[x]`.
pub fn pictures(e: &DoublePoset, f: &DoublePoset) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_bijection(e, f, true, |phi| out.push(phi.to_vec()));
    out
}

/// Number of pictures `E → F`.
pub fn pairing_basis(e: &DoublePoset, f: &DoublePoset) -> u64 {
    let mut count = 0u64;
    for_each_bijection(e, f, true, |_| count += 1);
    count
}

/// All bijections increasing from `(E, <₁)` to `(F, <₂)`.
pub fn increasing_bijections(e: &DoublePoset, f: &DoublePoset) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_bijection(e, f, false, |phi| out.push(phi.to_vec()));
    out
}

/// The graph `E ×_φ F`, indexed by the elements of `E`: its first order is
/// pulled back from `F`'s first order along `φ`, its second order is `E`'s.
pub fn internal_graph(e: &DoublePoset, f: &DoublePoset, phi: &[usize]) -> Result<DoublePoset> {
    let n = e.n();
    if phi.len() != n || f.n() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            actual: if f.n() != n { f.n() } else { phi.len() },
        });
    }
    let mut seen = 0u32;
    for &u in phi {
        if u >= n || seen & (1 << u) != 0 {
            return Err(Error::NotIncreasing);
        }
        seen |= 1 << u;
    }
    for x in 0..n {
        for y in ElementSet::from_mask(e.r1.succ_mask(x)).iter() {
            if !f.r2.less(phi[x], phi[y]) {
                return Err(Error::NotIncreasing);
            }
        }
    }
    let mut inverse = vec![0usize; n];
    for (x, &u) in phi.iter().enumerate() {
        inverse[u] = x;
    }
    let r1 = (0..n)
        .map(|x| {
            ElementSet::from_mask(f.r1.succ_mask(phi[x]))
                .iter()
                .fold(0u32, |m, v| m | (1 << inverse[v]))
        })
        .collect();
    Ok(DoublePoset {
        r1: Relation::from_masks(r1)?,
        r2: e.r2.clone(),
    })
}

/// One graph `E ×_φ F` per increasing bijection `φ`, with repetition.
pub fn internal_product_basis(e: &DoublePoset, f: &DoublePoset) -> Vec<DoublePoset> {
    increasing_bijections(e, f)
        .into_iter()
        .map(|phi| internal_graph(e, f, &phi).expect("φ was generated increasing"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(word: &[usize]) -> Permutation {
        Permutation::new(word.to_vec()).unwrap()
    }

    fn p(word: &[usize]) -> DoublePoset {
        DoublePoset::from_permutation(&perm(word))
    }

    fn key(d: &DoublePoset) -> CanonicalForm {
        d.canonical_form().unwrap()
    }

    #[test]
    fn compose_points() {
        let d = DoublePoset::point().compose(&DoublePoset::point());
        assert_eq!(d.first(), &Relation::antichain(2));
        assert_eq!(d.second(), &Relation::natural(2));
        // Incomparable in the first order, so not the chain P_12.
        assert_ne!(key(&d), key(&p(&[1, 2])));
        let x = p(&[2, 3, 1]);
        assert_eq!(x.compose(&DoublePoset::empty()), x);
        assert_eq!(DoublePoset::empty().compose(&x), x);
    }

    #[test]
    fn decompose_small() {
        let pt = DoublePoset::point();
        assert_eq!(
            pt.decompose(),
            vec![(DoublePoset::empty(), pt.clone()), (pt.clone(), DoublePoset::empty())]
        );
        assert_eq!(pt.compose(&pt).decompose().len(), 4);
        let parts = p(&[1, 2]).decompose();
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[1], (pt.clone(), pt));
    }

    #[test]
    fn pictures_small() {
        let pt = DoublePoset::point();
        assert_eq!(pictures(&pt, &pt), vec![vec![0]]);
        assert_eq!(pictures(&DoublePoset::empty(), &DoublePoset::empty()), vec![vec![]]);
        assert_eq!(pairing_basis(&p(&[2, 1]), &p(&[2, 1])), 1);
        assert_eq!(pairing_basis(&DoublePoset::antichain(2), &DoublePoset::antichain(2)), 2);
        assert_eq!(pairing_basis(&pt, &DoublePoset::antichain(2)), 0);
    }

    #[test]
    fn pictures_between_permutation_posets() {
        // Brute force over all bijections, straight from the definition.
        let all = Permutation::all(3);
        for s in &all {
            for t in &all {
                let (e, f) = (p(s.as_slice()), p(t.as_slice()));
                let brute = Permutation::all(3)
                    .iter()
                    .filter(|phi| {
                        let phi: Vec<usize> = phi.as_slice().iter().map(|v| v - 1).collect();
                        let fwd = (0..3).all(|x| {
                            (0..3).all(|y| !e.first().less(x, y) || f.second().less(phi[x], phi[y]))
                        });
                        let bwd = (0..3).all(|x| {
                            (0..3).all(|y| !f.first().less(phi[x], phi[y]) || e.second().less(x, y))
                        });
                        fwd && bwd
                    })
                    .count() as u64;
                let expected = u64::from(*t == s.inverse());
                assert_eq!(brute, expected);
                assert_eq!(pairing_basis(&e, &f), expected, "{s} {t}");
            }
        }
    }

    #[test]
    fn internal_graph_examples() {
        let pt = DoublePoset::point();
        assert_eq!(internal_graph(&pt, &pt, &[0]).unwrap(), pt);
        assert_eq!(internal_graph(&p(&[1, 2]), &p(&[1, 2]), &[0, 1]).unwrap(), p(&[1, 2]));
        let phis = increasing_bijections(&p(&[2, 1]), &p(&[2, 1]));
        assert_eq!(phis.len(), 1);
        let g = internal_graph(&p(&[2, 1]), &p(&[2, 1]), &phis[0]).unwrap();
        assert_eq!(key(&g), key(&p(&[1, 2])));
        assert_eq!(
            internal_graph(&p(&[2, 1]), &p(&[2, 1]), &[0, 1]),
            Err(Error::NotIncreasing)
        );
        assert!(internal_graph(&pt, &pt, &[0, 1]).is_err());
    }

    #[test]
    fn internal_product_basis_examples() {
        let pt = DoublePoset::point();
        assert_eq!(internal_product_basis(&pt, &pt), vec![pt]);
        for s in Permutation::all(2) {
            for t in Permutation::all(2) {
                let prod = internal_product_basis(&p(s.as_slice()), &p(t.as_slice()));
                assert_eq!(prod.len(), 1);
                assert_eq!(key(&prod[0]), key(&DoublePoset::from_permutation(&s.compose(&t).unwrap())));
            }
        }
        let f = DoublePoset::new(Relation::antichain(2), Relation::natural(2)).unwrap();
        assert_eq!(internal_product_basis(&DoublePoset::antichain(2), &f).len(), 2);
        assert!(internal_product_basis(&DoublePoset::point(), &f).is_empty());
    }

    #[test]
    fn permutation_posets() {
        assert_eq!(p(&[1]), DoublePoset::point());
        let p12 = p(&[1, 2]);
        assert_eq!(p12.first(), &Relation::natural(2));
        assert_eq!(p12.second(), &Relation::natural(2));
        let p21 = p(&[2, 1]);
        assert_eq!(p21.first(), &Relation::natural(2).opposite());
    }

    #[test]
    fn ferrers_posets() {
        let pi = |parts: &[usize]| DoublePoset::pi_from_partition(&Partition::new(parts.to_vec()).unwrap());
        assert_eq!(pi(&[1]), DoublePoset::point());
        let row = pi(&[2]);
        assert_eq!(row.first(), &Relation::natural(2));
        assert_eq!(row.second(), &Relation::natural(2));
        let col = pi(&[1, 1]);
        assert_eq!(col.first(), &Relation::natural(2));
        assert_eq!(col.second(), &Relation::natural(2).opposite());
        assert!(pi(&[2, 1]).is_special());
        assert!(pi(&[3, 2, 2, 1]).is_special());
    }

    #[test]
    fn tilde_examples() {
        assert_eq!(DoublePoset::point().tilde(), DoublePoset::point());
        let t = p(&[1, 2]).tilde();
        assert_eq!(t.first(), &Relation::natural(2).opposite());
        assert_eq!(key(&t), key(&p(&[1, 2])));
        for n in 0..=4 {
            for s in Permutation::all(n) {
                let d = p(s.as_slice());
                assert_eq!(d.tilde().tilde(), d);
            }
        }
    }

    #[test]
    fn special_and_natural() {
        for s in Permutation::all(3) {
            assert!(p(s.as_slice()).is_special());
            assert_eq!(p(s.as_slice()).labelling().unwrap(), vec![1, 2, 3]);
        }
        assert!(p(&[1, 2]).is_naturally_labelled());
        assert!(!p(&[2, 1]).is_naturally_labelled());
        assert!(!DoublePoset::antichain(2).is_special());
        assert_eq!(DoublePoset::antichain(2).labelling(), Err(Error::NotSpecial));
        let col = DoublePoset::pi_from_partition(&Partition::new(vec![1, 1]).unwrap());
        assert_eq!(col.labelling().unwrap(), vec![2, 1]);
    }

    #[test]
    fn pi_partition_conditions() {
        let p21 = p(&[2, 1]);
        assert!(!p21.is_pi_partition(&[1, 1]));
        assert!(p21.is_pi_partition(&[2, 1]));
        assert!(p(&[1, 2]).is_pi_partition(&[1, 1]));
    }
}
