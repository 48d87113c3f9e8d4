//! Quasi-symmetric functions in the monomial basis, and the generating
//! function Γ of a double poset.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::double_poset::DoublePoset;
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::perm::{descent_composition, parse_letters, SElement};

/// Largest double poset accepted by [`gamma`]; the enumeration is
/// exponential in the ground set.
pub const GAMMA_CAP: usize = 8;

/// A sequence of positive integers. Ordered by weight, then
/// lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Composition(Vec<usize>);

/// Coordinates in the monomial basis `M_C`.
pub type QElement = LinComb<Composition>;
pub type QTensor = LinComb<(Composition, Composition)>;

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(parts));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All compositions of `n`, in the type's order.
    pub fn all(n: usize) -> Vec<Composition> {
        let mut out: Vec<Composition> = compositions_of(n).into_iter().map(Composition).collect();
        out.sort();
        out
    }

    /// Every composition obtained by splitting each part into ordered
    /// positive summands (including `self`).
    pub fn refinements(&self) -> Vec<Composition> {
        let mut acc: Vec<Vec<usize>> = vec![Vec::new()];
        for &part in &self.0 {
            let pieces = compositions_of(part);
            let mut next = Vec::with_capacity(acc.len() * pieces.len());
            for prefix in &acc {
                for piece in &pieces {
                    let mut v = prefix.clone();
                    v.extend_from_slice(piece);
                    next.push(v);
                }
            }
            acc = next;
        }
        acc.into_iter().map(Composition).collect()
    }
}

fn compositions_of(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions_of(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Composition{self}")
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        Composition::new(parse_letters_multi(s)?)
    }
}

/// Like `parse_letters`, but a bare run of digits is one number.
pub(crate) fn parse_letters_multi(s: &str) -> Result<Vec<usize>> {
    if s.chars().all(|c| c.is_ascii_digit()) && !s.is_empty() {
        return s.parse::<usize>().map(|v| vec![v]).map_err(|e| Error::Parse {
            line: 1,
            column: 1,
            message: e.to_string(),
        });
    }
    parse_letters(s)
}

/// `M_C` as an element.
pub fn monomial(c: Composition) -> QElement {
    QElement::basis(c)
}

/// Monomial expansion of the generating function of π-partitions.
///
/// The coefficient of `M_(c₁,…,c_k)` counts π-partitions onto exactly
/// `{1, …, k}` whose fibres have sizes `c₁, …, c_k`.
pub fn gamma(d: &DoublePoset) -> Result<QElement> {
    let n = d.n();
    if n > GAMMA_CAP {
        return Err(Error::SizeCap {
            what: "gamma",
            size: n,
            cap: GAMMA_CAP,
        });
    }
    // Predecessors are valued first, so each element only has to respect
    // the lower bounds coming from already assigned elements.
    let order = d.first().linear_extensions().into_iter().next().unwrap_or_default();
    let mut search = GammaSearch {
        d,
        order: &order,
        values: vec![0; n],
        counts: vec![0; n + 1],
        out: QElement::zero(),
    };
    search.run(0, 0)?;
    Ok(search.out)
}

struct GammaSearch<'a> {
    d: &'a DoublePoset,
    order: &'a [usize],
    values: Vec<usize>,
    counts: Vec<usize>,
    out: QElement,
}

impl GammaSearch<'_> {
    fn run(&mut self, depth: usize, max_value: usize) -> Result<()> {
        let n = self.order.len();
        let used = self.counts[1..=max_value.min(n)].iter().filter(|&&c| c > 0).count();
        if max_value - used > n - depth {
            return Ok(());
        }
        if depth == n {
            let parts = self.counts[1..=max_value].to_vec();
            return self.out.add_term(Composition(parts), 1);
        }
        let e = self.order[depth];
        let mut low = 1;
        for p in crate::poset::ElementSet::from_mask(self.d.first().pred_mask(e)).iter() {
            let strict = self.d.second().less(e, p);
            low = low.max(self.values[p] + usize::from(strict));
        }
        for v in low..=n {
            self.values[e] = v;
            self.counts[v] += 1;
            self.run(depth + 1, max_value.max(v))?;
            self.counts[v] -= 1;
        }
        self.values[e] = 0;
        Ok(())
    }
}

/// Quasi-shuffle product of monomials, extended bilinearly.
pub fn qsym_product(a: &QElement, b: &QElement) -> Result<QElement> {
    a.map_bilinear(b, |x, y| {
        let mut out = QElement::zero();
        let mut prefix = Vec::with_capacity(x.len() + y.len());
        quasi_shuffle(&x.0, &y.0, &mut prefix, &mut out)?;
        Ok(out)
    })
}

fn quasi_shuffle(a: &[usize], b: &[usize], prefix: &mut Vec<usize>, out: &mut QElement) -> Result<()> {
    match (a.split_first(), b.split_first()) {
        (None, _) | (_, None) => {
            let mut v = prefix.clone();
            v.extend_from_slice(a);
            v.extend_from_slice(b);
            out.add_term(Composition(v), 1)
        }
        (Some((&x, ra)), Some((&y, rb))) => {
            prefix.push(x);
            quasi_shuffle(ra, b, prefix, out)?;
            prefix.pop();
            prefix.push(y);
            quasi_shuffle(a, rb, prefix, out)?;
            prefix.pop();
            prefix.push(x + y);
            quasi_shuffle(ra, rb, prefix, out)?;
            prefix.pop();
            Ok(())
        }
    }
}

/// Deconcatenation coproduct as a tensor.
pub fn coproduct_q(a: &QElement) -> Result<QTensor> {
    a.map_linear(|c| {
        QTensor::from_terms((0..=c.len()).map(|i| {
            (
                (Composition(c.0[..i].to_vec()), Composition(c.0[i..].to_vec())),
                1,
            )
        }))
    })
}

/// Deconcatenation coproduct as a sorted list of `(left, right, coeff)`.
pub fn qsym_coproduct(a: &QElement) -> Result<Vec<(Composition, Composition, i64)>> {
    Ok(coproduct_q(a)?
        .iter()
        .map(|((l, r), &c)| (l.clone(), r.clone(), c))
        .collect())
}

/// `F_C = Σ M_D` over refinements `D` of `C`.
pub fn fundamental_to_monomial(c: &Composition) -> QElement {
    let mut out = QElement::zero();
    for d in c.refinements() {
        out.add_term(d, 1).expect("coefficients are one");
    }
    out
}

/// `σ ↦ F_{C(σ)}`, extended linearly. The empty permutation maps to `M_()`.
pub fn fundamental_of(a: &SElement) -> Result<QElement> {
    a.map_linear(|s| {
        if s.is_empty() {
            return Ok(monomial(Composition::empty()));
        }
        Ok(fundamental_to_monomial(&descent_composition(s)?))
    })
}

/// Prints `M`-prefixed monomials: `1*M(2) + 1*M(1,1)`.
pub struct MonomialDisplay<'a>(pub &'a QElement);

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            return write!(f, "0");
        }
        for (i, (c, k)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{k}*M{c}")?;
        }
        Ok(())
    }
}
