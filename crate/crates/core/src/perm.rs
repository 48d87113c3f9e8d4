//! The Malvenuto–Reutenauer algebra of permutations and the linear
//! extension map from special double posets into it.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::algebra::DElement;
use crate::double_poset::DoublePoset;
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::qsym::Composition;

/// A permutation of `{1, …, n}` in one-line notation. `n = 0` is allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

pub type SElement = LinComb<Permutation>;
pub type STensor = LinComb<(Permutation, Permutation)>;

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(word));
            }
            seen[v] = true;
        }
        Ok(Permutation(word))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// `n n-1 … 1`.
    pub fn longest(n: usize) -> Self {
        Permutation((1..=n).rev().collect())
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        fn rec(n: usize, used: &mut [bool], cur: &mut Vec<usize>, out: &mut Vec<Permutation>) {
            if cur.len() == n {
                out.push(Permutation(cur.clone()));
                return;
            }
            for v in 1..=n {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    rec(n, used, cur, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        rec(n, &mut vec![false; n + 1], &mut cur, &mut out);
        out
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// `σ(i)` for `1 ≤ i ≤ n`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                actual: other.len(),
            });
        }
        Ok(Permutation(other.0.iter().map(|&i| self.0[i - 1]).collect()))
    }

    pub fn is_involution(&self) -> bool {
        self.inverse() == *self
    }

    pub fn to_word(&self) -> Word {
        Word(self.0.clone())
    }
}

impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn write_letters(f: &mut fmt::Formatter<'_>, letters: &[usize]) -> fmt::Result {
    if letters.is_empty() {
        return f.write_str("()");
    }
    let sep = if letters.iter().all(|&v| v < 10) { "" } else { " " };
    for (i, v) in letters.iter().enumerate() {
        if i > 0 {
            f.write_str(sep)?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

/// Letters run together when all are single digits, space separated
/// otherwise; the empty sequence prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.0)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// Parses letters separated by spaces or commas; a single run of digits
/// without separators is read one digit per letter. `()` is empty.
pub(crate) fn parse_letters(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    let bad = |message: String| Error::Parse {
        line: 1,
        column: 1,
        message,
    };
    if s.is_empty() || s == "()" {
        return Ok(Vec::new());
    }
    if s.chars().all(|c| c.is_ascii_digit()) {
        return Ok(s.bytes().map(|b| (b - b'0') as usize).collect());
    }
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|e| bad(format!("bad letter {t:?}: {e}"))))
        .collect()
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::new(parse_letters(s)?)
    }
}

/// A word over the positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::Precondition("word letters must be positive".into()));
        }
        Ok(Word(letters))
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_letter(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.0)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::new(parse_letters(s)?)
    }
}

/// Ranks positions by letter, equal letters numbered left to right.
pub fn standardize(letters: &[usize]) -> Permutation {
    let mut positions: Vec<usize> = (0..letters.len()).collect();
    positions.sort_by_key(|&p| (letters[p], p));
    let mut out = vec![0; letters.len()];
    for (rank, p) in positions.into_iter().enumerate() {
        out[p] = rank + 1;
    }
    Permutation(out)
}

/// All interleavings of `σ` with `τ` raised by `|σ|`.
pub fn shifted_shuffle(sigma: &Permutation, tau: &Permutation) -> Result<SElement> {
    let shift = sigma.len();
    let right: Vec<usize> = tau.0.iter().map(|&v| v + shift).collect();
    let mut out = SElement::zero();
    let mut cur = Vec::with_capacity(sigma.len() + tau.len());
    shuffle_rec(&sigma.0, &right, &mut cur, &mut out)?;
    Ok(out)
}

fn shuffle_rec(a: &[usize], b: &[usize], cur: &mut Vec<usize>, out: &mut SElement) -> Result<()> {
    if a.is_empty() && b.is_empty() {
        return out.add_term(Permutation(cur.clone()), 1);
    }
    if let Some((&x, rest)) = a.split_first() {
        cur.push(x);
        shuffle_rec(rest, b, cur, out)?;
        cur.pop();
    }
    if let Some((&y, rest)) = b.split_first() {
        cur.push(y);
        shuffle_rec(a, rest, cur, out)?;
        cur.pop();
    }
    Ok(())
}

/// Bilinear extension of [`shifted_shuffle`].
pub fn product_s(a: &SElement, b: &SElement) -> Result<SElement> {
    a.map_bilinear(b, shifted_shuffle)
}

/// `st(u) ⊗ st(v)` for every factorisation `σ = uv`, shortest `u` first.
pub fn coproduct_s(sigma: &Permutation) -> Vec<(Permutation, Permutation)> {
    (0..=sigma.len())
        .map(|cut| (standardize(&sigma.0[..cut]), standardize(&sigma.0[cut..])))
        .collect()
}

/// Linear extension of [`coproduct_s`].
pub fn coproduct_s_linear(a: &SElement) -> Result<STensor> {
    a.map_linear(|s| STensor::from_terms(coproduct_s(s).into_iter().map(|t| (t, 1))))
}

/// Componentwise product on `ℤS ⊗ ℤS`.
pub fn tensor_product_s(a: &STensor, b: &STensor) -> Result<STensor> {
    a.tensor_product(b, shifted_shuffle, shifted_shuffle)
}

/// `(σ, τ) = 1` iff `σ = τ⁻¹`, extended bilinearly.
pub fn joellenbeck(a: &SElement, b: &SElement) -> Result<i64> {
    a.pair_with(b, |s, t| Ok(i64::from(*s == t.inverse())))
}

/// Composition of permutations, zero across different degrees.
pub fn internal_s(a: &SElement, b: &SElement) -> Result<SElement> {
    a.map_bilinear(b, |s, t| {
        if s.len() != t.len() {
            Ok(SElement::zero())
        } else {
            Ok(SElement::basis(s.compose(t)?))
        }
    })
}

/// Lengths of the maximal ascending runs of `σ`.
pub fn descent_composition(sigma: &Permutation) -> Result<Composition> {
    if sigma.is_empty() {
        return Err(Error::Empty);
    }
    let mut parts = Vec::new();
    let mut run = 1;
    for w in sigma.0.windows(2) {
        if w[1] > w[0] {
            run += 1;
        } else {
            parts.push(run);
            run = 1;
        }
    }
    parts.push(run);
    Composition::new(parts)
}

/// Linear extensions of a special double poset as permutations: the
/// ordering `e_1 … e_n` becomes `ω(e_1) … ω(e_n)`.
pub fn linear_extensions_special(d: &DoublePoset) -> Result<Vec<Permutation>> {
    let omega = d.labelling()?;
    let mut out: Vec<Permutation> = d
        .first()
        .linear_extensions()
        .into_iter()
        .map(|order| Permutation(order.into_iter().map(|e| omega[e]).collect()))
        .collect();
    out.sort();
    Ok(out)
}

/// `L`: each special basis double poset goes to the sum of its linear
/// extensions.
pub fn linear_extension_map(a: &DElement) -> Result<SElement> {
    a.map_linear(|key| {
        let d = key.double_poset();
        SElement::from_terms(linear_extensions_special(&d)?.into_iter().map(|s| (s, 1)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::Relation;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn elem(terms: &[(&str, i64)]) -> SElement {
        SElement::from_terms(terms.iter().map(|&(s, c)| (perm(s), c))).unwrap()
    }

    #[test]
    fn standardize_examples() {
        assert_eq!(
            standardize(&[4, 3, 2, 4, 1, 3, 4, 4, 2, 3, 3]),
            perm("8 4 2 9 1 5 10 11 3 6 7")
        );
        assert_eq!(standardize(perm("3142").as_slice()), perm("3142"));
        assert_eq!(standardize(&[1, 1]), perm("12"));
        assert_eq!(standardize(&[]), Permutation::identity(0));
    }

    #[test]
    fn shuffle_examples() {
        assert_eq!(shifted_shuffle(&perm("1"), &perm("1")).unwrap(), elem(&[("12", 1), ("21", 1)]));
        assert_eq!(shifted_shuffle(&perm("213"), &perm("()")).unwrap(), elem(&[("213", 1)]));
        let s = shifted_shuffle(&perm("12"), &perm("12")).unwrap();
        assert_eq!(s.len(), 6);
        assert!(s.iter().all(|(_, &c)| c == 1));
    }

    #[test]
    fn coproduct_examples() {
        let e = Permutation::identity(0);
        assert_eq!(coproduct_s(&perm("1")), vec![(e.clone(), perm("1")), (perm("1"), e.clone())]);
        assert_eq!(
            coproduct_s(&perm("12")),
            vec![(e.clone(), perm("12")), (perm("1"), perm("1")), (perm("12"), e.clone())]
        );
        assert_eq!(
            coproduct_s(&perm("21")),
            vec![(e.clone(), perm("21")), (perm("1"), perm("1")), (perm("21"), e)]
        );
    }

    #[test]
    fn joellenbeck_examples() {
        assert_eq!(joellenbeck(&elem(&[("231", 1)]), &elem(&[("312", 1)])).unwrap(), 1);
        assert_eq!(joellenbeck(&elem(&[("12", 1)]), &elem(&[("21", 1)])).unwrap(), 0);
        for s in Permutation::all(3) {
            let x = SElement::basis(s.clone());
            let inv = s.as_slice().iter().enumerate().all(|(i, &v)| s.as_slice()[v - 1] == i + 1);
            assert_eq!(joellenbeck(&x, &x).unwrap(), i64::from(inv));
        }
    }

    #[test]
    fn internal_examples() {
        assert_eq!(internal_s(&elem(&[("21", 1)]), &elem(&[("21", 1)])).unwrap(), elem(&[("12", 1)]));
        assert_eq!(internal_s(&elem(&[("231", 1)]), &elem(&[("312", 1)])).unwrap(), elem(&[("123", 1)]));
        for n in 0..=3 {
            let id = SElement::basis(Permutation::identity(n));
            for s in Permutation::all(n) {
                let x = SElement::basis(s);
                assert_eq!(internal_s(&id, &x).unwrap(), x);
                assert_eq!(internal_s(&x, &id).unwrap(), x);
            }
        }
        assert!(internal_s(&elem(&[("1", 1)]), &elem(&[("12", 1)])).unwrap().is_zero());
    }

    #[test]
    fn descent_compositions() {
        assert_eq!(descent_composition(&perm("51247836")).unwrap().parts(), &[1, 5, 2]);
        assert_eq!(descent_composition(&Permutation::identity(4)).unwrap().parts(), &[4]);
        assert_eq!(descent_composition(&perm("321")).unwrap().parts(), &[1, 1, 1]);
        assert_eq!(descent_composition(&Permutation::identity(0)), Err(Error::Empty));
    }

    #[test]
    fn linear_extension_examples() {
        for s in Permutation::all(3) {
            let d = DoublePoset::from_permutation(&s);
            assert_eq!(linear_extensions_special(&d).unwrap(), vec![s.clone()]);
            let key = d.canonical_form().unwrap();
            assert_eq!(
                linear_extension_map(&DElement::basis(key)).unwrap(),
                SElement::basis(s)
            );
        }
        let anti = DoublePoset::new(Relation::antichain(2), Relation::natural(2)).unwrap();
        assert_eq!(linear_extensions_special(&anti).unwrap(), vec![perm("12"), perm("21")]);
        assert_eq!(
            linear_extension_map(&DElement::basis(anti.canonical_form().unwrap())).unwrap(),
            elem(&[("12", 1), ("21", 1)])
        );
        assert_eq!(
            linear_extension_map(&DElement::basis(crate::canon::CanonicalForm::empty())).unwrap(),
            SElement::basis(Permutation::identity(0))
        );
        assert_eq!(
            linear_extensions_special(&DoublePoset::antichain(2)),
            Err(Error::NotSpecial)
        );
    }

    #[test]
    fn parsing() {
        assert_eq!(perm("2,3,1"), perm("231"));
        assert_eq!(perm("10 1 2 3 4 5 6 7 8 9").to_string(), "10 1 2 3 4 5 6 7 8 9");
        assert!("22".parse::<Permutation>().is_err());
        assert!("0".parse::<Word>().is_err());
    }
}
