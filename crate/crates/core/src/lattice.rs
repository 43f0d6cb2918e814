//! Kashiwara operators `ẽ_i`, `f̃_i` on `V(Λ1)` and `W(Λ2)` computed from
//! the `i`-string decomposition, and their reduction modulo `qL`, where `L`
//! is the lattice spanned by the tabloid basis over the ring of rational
//! functions regular at `q = 0`.
//!
//! A vector of weight `μ` decomposes uniquely as `v = Σ_k f_i^{(k)} u_k`
//! with `e_i u_k = 0`; then `f̃_i v = Σ_k f_i^{(k+1)} u_k` and
//! `ẽ_i v = Σ_k f_i^{(k-1)} u_k`. The `u_k` involve division by quantum
//! binomials, so coordinates are kept as a numerator vector over a common
//! Laurent denominator.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::laurent::{quantum_binomial, quantum_factorial, LaurentPoly};
use crate::modules::{e_tensor, f_tensor, ModuleVector};
use crate::tableaux::Tabloid;
use crate::weight::Node;

/// The vector `num / den`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeVector {
    num: ModuleVector,
    den: LaurentPoly,
}

impl LatticeVector {
    pub fn new(num: ModuleVector, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(LatticeVector { num, den })
    }

    pub fn from_vector(v: &ModuleVector) -> Self {
        LatticeVector {
            num: v.clone(),
            den: LaurentPoly::one(),
        }
    }

    pub fn numerator(&self) -> &ModuleVector {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn sub(&self, other: &LatticeVector) -> LatticeVector {
        let mut num = self.num.scaled(&other.den);
        num.add_scaled(&other.num, &-&self.den);
        LatticeVector {
            num,
            den: &self.den * &other.den,
        }
    }

    fn add(&self, other: &LatticeVector) -> LatticeVector {
        let mut num = self.num.scaled(&other.den);
        num.add_scaled(&other.num, &self.den);
        LatticeVector {
            num,
            den: &self.den * &other.den,
        }
    }

    /// `x^m / [m]_i!` for `x` one of the Chevalley generators.
    fn divided(&self, node: Node, m: u32, raise: bool) -> LatticeVector {
        let mut num = self.num.clone();
        for _ in 0..m {
            num = if raise {
                e_tensor(node, &num)
            } else {
                f_tensor(node, &num)
            };
        }
        LatticeVector {
            num,
            den: &self.den * &quantum_factorial(m, node),
        }
    }

    /// Whether the vector lies in `L`: every coordinate is regular at `q = 0`.
    pub fn in_lattice(&self) -> bool {
        let v = self.den.min_exponent().expect("nonzero denominator");
        self.num
            .terms()
            .all(|(_, c)| c.min_exponent().is_some_and(|e| e >= v))
    }

    /// The image in `L / qL` as integer coordinates, or `None` when the
    /// vector is not in `L` or a value at `q = 0` is not an integer.
    pub fn mod_q(&self) -> Option<BTreeMap<Tabloid, i64>> {
        if !self.in_lattice() {
            return None;
        }
        let (v, d) = self.den.leading_low().expect("nonzero denominator");
        let mut out = BTreeMap::new();
        for (t, c) in self.num.terms() {
            let n = c.coeff(v);
            if n % d != 0 {
                return None;
            }
            if n != 0 {
                out.insert(t.clone(), n / d);
            }
        }
        Some(out)
    }
}

/// The components `u_k` of the `i`-string decomposition of `v`, indexed by
/// `k`. `v` must be weight-homogeneous.
pub fn string_decomposition(node: Node, v: &ModuleVector) -> Result<Vec<(u32, LatticeVector)>> {
    let Some(wt) = v.weight() else {
        return Ok(Vec::new());
    };
    let mu = wt.pairing(node);
    let mut rem = LatticeVector::from_vector(v);
    let mut out = Vec::new();
    while !rem.is_zero() {
        let mut top = 0u32;
        let mut probe = rem.num.clone();
        loop {
            let next = e_tensor(node, &probe);
            if next.is_zero() {
                break;
            }
            probe = next;
            top += 1;
        }
        let n = mu + 2 * top as i32;
        if n < top as i32 {
            return Err(Error::Invariant(format!(
                "string of length {top} above a vector of weight {wt} at node {node}"
            )));
        }
        let binom = quantum_binomial(n as u32, top, node);
        let e_top = rem.divided(node, top, true);
        let u = LatticeVector::new(e_top.num, &e_top.den * &binom)?;
        rem = rem.sub(&u.divided(node, top, false));
        out.push((top, u));
        if out.len() > 64 {
            return Err(Error::Invariant(
                "string decomposition does not terminate".into(),
            ));
        }
    }
    Ok(out)
}

fn kashiwara(node: Node, v: &ModuleVector, raise: bool) -> Result<LatticeVector> {
    let mut acc = LatticeVector::from_vector(&ModuleVector::zero(v.shape()));
    for (k, u) in string_decomposition(node, v)? {
        let term = match (raise, k) {
            (true, 0) => continue,
            (true, k) => u.divided(node, k - 1, false),
            (false, k) => u.divided(node, k + 1, false),
        };
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// Kashiwara's lowering operator `f̃_i`.
pub fn kashiwara_f(node: Node, v: &ModuleVector) -> Result<LatticeVector> {
    kashiwara(node, v, false)
}

/// Kashiwara's raising operator `ẽ_i`.
pub fn kashiwara_e(node: Node, v: &ModuleVector) -> Result<LatticeVector> {
    kashiwara(node, v, true)
}
