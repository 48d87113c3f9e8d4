//! The graded Hopf algebra ℤ𝐃 of double posets.
//!
//! Elements are integer combinations of isomorphism classes, keyed by
//! [`CanonicalForm`]. The product is composition, the coproduct sums over
//! decompositions of the first order, and the antipode follows the usual
//! recursion for graded connected bialgebras.

use std::collections::HashMap;

use crate::canon::CanonicalForm;
use crate::double_poset::{self, DoublePoset};
use crate::error::Result;
use crate::lincomb::{checked_mul, LinComb};

pub type DElement = LinComb<CanonicalForm>;
pub type DTensor = LinComb<(CanonicalForm, CanonicalForm)>;

/// The class of `d` with coefficient one.
pub fn basis(d: &DoublePoset) -> Result<DElement> {
    Ok(DElement::basis(d.canonical_form()?))
}

/// The empty double poset.
pub fn unit() -> DElement {
    DElement::basis(CanonicalForm::empty())
}

pub fn product_basis(x: &CanonicalForm, y: &CanonicalForm) -> Result<CanonicalForm> {
    x.double_poset().compose(&y.double_poset()).canonical_form()
}

pub fn product(a: &DElement, b: &DElement) -> Result<DElement> {
    a.map_bilinear(b, |x, y| Ok(DElement::basis(product_basis(x, y)?)))
}

pub fn coproduct_basis(x: &CanonicalForm) -> Result<DTensor> {
    let mut out = DTensor::zero();
    for (i, s) in x.double_poset().decompose() {
        out.add_term((i.canonical_form()?, s.canonical_form()?), 1)?;
    }
    Ok(out)
}

pub fn coproduct(a: &DElement) -> Result<DTensor> {
    a.map_linear(coproduct_basis)
}

pub fn counit(a: &DElement) -> i64 {
    a.coefficient(&CanonicalForm::empty())
}

/// Componentwise product on `ℤ𝐃 ⊗ ℤ𝐃`.
pub fn tensor_product(a: &DTensor, b: &DTensor) -> Result<DTensor> {
    let mul = |x: &CanonicalForm, y: &CanonicalForm| Ok(DElement::basis(product_basis(x, y)?));
    a.tensor_product(b, mul, mul)
}

/// Multiplication map `ℤ𝐃 ⊗ ℤ𝐃 → ℤ𝐃`.
pub fn multiply_tensor(t: &DTensor) -> Result<DElement> {
    let mut out = DElement::zero();
    for ((x, y), &c) in t {
        out.add_term(product_basis(x, y)?, c)?;
    }
    Ok(out)
}

/// Antipode with a memo of basis values, reusable across calls.
#[derive(Default)]
pub struct Antipode {
    memo: HashMap<CanonicalForm, DElement>,
}

impl Antipode {
    pub fn new() -> Self {
        Self::default()
    }

    /// `S(x) = −x − Σ S(x′)·x″` over the terms of `δ(x)` with both sides
    /// nonempty; `S(1) = 1`.
    pub fn basis(&mut self, x: &CanonicalForm) -> Result<DElement> {
        if let Some(v) = self.memo.get(x) {
            return Ok(v.clone());
        }
        let value = if x.n() == 0 {
            unit()
        } else {
            let mut out = DElement::basis(x.clone()).scale(-1)?;
            for ((left, right), &c) in &coproduct_basis(x)? {
                if left.n() == 0 || right.n() == 0 {
                    continue;
                }
                let s_left = self.basis(left)?;
                let term = product(&s_left, &DElement::basis(right.clone()))?;
                out.add_scaled(-c, &term)?;
            }
            out
        };
        self.memo.insert(x.clone(), value.clone());
        Ok(value)
    }

    pub fn apply(&mut self, a: &DElement) -> Result<DElement> {
        a.map_linear(|x| self.basis(x))
    }
}

pub fn antipode(a: &DElement) -> Result<DElement> {
    Antipode::new().apply(a)
}

/// Zelevinsky pairing: pictures counted on basis pairs, extended bilinearly.
pub fn pairing(a: &DElement, b: &DElement) -> Result<i64> {
    a.pair_with(b, |x, y| {
        if x.n() != y.n() {
            return Ok(0);
        }
        let count = double_poset::pairing_basis(&x.double_poset(), &y.double_poset());
        i64::try_from(count).map_err(|_| crate::error::Error::Overflow)
    })
}

/// `⟨a, t⟩` on `ℤ𝐃 ⊗ ℤ𝐃` against a pair of elements: `Σ c·⟨e, x⟩⟨f, y⟩`.
pub fn pairing_tensor(e: &DElement, f: &DElement, t: &DTensor) -> Result<i64> {
    let mut total = 0i64;
    for ((x, y), &c) in t {
        let left = pairing(e, &DElement::basis(x.clone()))?;
        if left == 0 {
            continue;
        }
        let right = pairing(f, &DElement::basis(y.clone()))?;
        total = crate::lincomb::checked_add(total, checked_mul(c, checked_mul(left, right)?)?)?;
    }
    Ok(total)
}

pub fn internal_product_basis(x: &CanonicalForm, y: &CanonicalForm) -> Result<DElement> {
    let mut out = DElement::zero();
    if x.n() != y.n() {
        return Ok(out);
    }
    for g in double_poset::internal_product_basis(&x.double_poset(), &y.double_poset()) {
        out.add_term(g.canonical_form()?, 1)?;
    }
    Ok(out)
}

/// Degree-preserving internal product, bilinear.
pub fn internal_product(a: &DElement, b: &DElement) -> Result<DElement> {
    a.map_bilinear(b, internal_product_basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::perm::Permutation;

    fn pt() -> DElement {
        basis(&DoublePoset::point()).unwrap()
    }

    fn p(word: &str) -> DElement {
        basis(&DoublePoset::from_permutation(&word.parse::<Permutation>().unwrap())).unwrap()
    }

    fn key(x: &DElement) -> CanonicalForm {
        x.keys().next().unwrap().clone()
    }

    #[test]
    fn linear_structure() {
        let x = pt().add(&p("21")).unwrap();
        assert_eq!(x.add(&DElement::zero()).unwrap(), x);
        assert!(x.scale(0).unwrap().is_zero());
        assert!(x.add(&x.scale(-1).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn product_examples() {
        let pp = DoublePoset::point().compose(&DoublePoset::point());
        assert_eq!(product(&pt(), &pt()).unwrap(), basis(&pp).unwrap());
        assert_eq!(product(&pt(), &unit()).unwrap(), pt());
        assert_eq!(product(&p("231"), &unit()).unwrap(), p("231"));
        let two = pt().add(&pt()).unwrap();
        assert_eq!(product(&two, &pt()).unwrap(), basis(&pp).unwrap().scale(2).unwrap());
        let big = DElement::from_terms([(key(&pt()), i64::MAX)]).unwrap();
        assert_eq!(product(&big, &two), Err(Error::Overflow));
    }

    #[test]
    fn coproduct_examples() {
        let e = CanonicalForm::empty();
        let point = key(&pt());
        let expect = DTensor::from_terms([((e.clone(), point.clone()), 1), ((point.clone(), e.clone()), 1)]).unwrap();
        assert_eq!(coproduct(&pt()).unwrap(), expect);
        assert_eq!(coproduct(&unit()).unwrap(), DTensor::basis((e.clone(), e.clone())));
        let p12 = key(&p("12"));
        let expect = DTensor::from_terms([
            ((e.clone(), p12.clone()), 1),
            ((point.clone(), point), 1),
            ((p12, e), 1),
        ])
        .unwrap();
        assert_eq!(coproduct(&p("12")).unwrap(), expect);
    }

    #[test]
    fn counit_examples() {
        assert_eq!(counit(&unit()), 1);
        assert_eq!(counit(&pt()), 0);
        let x = unit().scale(3).unwrap().add(&pt().scale(5).unwrap()).unwrap();
        assert_eq!(counit(&x), 3);
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(antipode(&unit()).unwrap(), unit());
        assert_eq!(antipode(&pt()).unwrap(), pt().scale(-1).unwrap());
        // m∘(S⊗id)∘δ vanishes in positive degree.
        for w in ["12", "21", "231"] {
            let x = p(w);
            let mut s = Antipode::new();
            let left = coproduct(&x).unwrap();
            let mut total = DElement::zero();
            for ((a, b), &c) in &left {
                let t = product(&s.basis(a).unwrap(), &DElement::basis(b.clone())).unwrap();
                total.add_scaled(c, &t).unwrap();
            }
            assert!(total.is_zero());
        }
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(pairing(&pt(), &pt()).unwrap(), 1);
        assert_eq!(pairing(&pt().scale(2).unwrap(), &pt().scale(3).unwrap()).unwrap(), 6);
        let pp = basis(&DoublePoset::point().compose(&DoublePoset::point())).unwrap();
        // Both first orders are empty, so both bijections are pictures.
        assert_eq!(pairing(&product(&pt(), &pt()).unwrap(), &pp).unwrap(), 2);
        assert_eq!(pairing(&p("12"), &p("12")).unwrap(), 1);
        assert_eq!(pairing(&pt(), &pp).unwrap(), 0);
    }

    #[test]
    fn internal_product_examples() {
        assert_eq!(internal_product(&p("21"), &p("21")).unwrap(), p("12"));
        assert_eq!(internal_product(&pt(), &pt()).unwrap(), pt());
        assert!(internal_product(&pt(), &p("12")).unwrap().is_zero());
    }
}
