//! The modules `V(Λ1)`, `W(Λ2)` and `W(λ)` of `U_q(G2)` with their natural
//! bases indexed by tabloids, and the action of the Chevalley generators.
//!
//! A tabloid `τ = C_1 ... C_r` indexes `v_τ = v_{C_r} ⊗ ... ⊗ v_{C_1}`, so the
//! tensor factors listed left to right are the columns read right to left,
//! exactly as in the reading of `τ`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::crystal::Letter;
use crate::error::{Error, Result};
use crate::laurent::{quantum_factorial, LaurentPoly};
use crate::tableaux::{Column, Shape, Tableau, Tabloid};
use crate::weight::{Node, Weight};

/// `t_i` on a vector of weight `wt`: `q_i^{<wt, α_i^∨>}`.
pub fn t_scalar(node: Node, wt: Weight) -> LaurentPoly {
    LaurentPoly::q_pow(node.q_exponent() * wt.pairing(node))
}

/// A vector of `W(λ)`: a finite combination of basis vectors `v_τ` over
/// tabloids of one shape.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "VectorRepr", into = "VectorRepr")]
pub struct ModuleVector {
    shape: Shape,
    terms: BTreeMap<Tabloid, LaurentPoly>,
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    tabloid: Tabloid,
    coeff: LaurentPoly,
}

#[derive(Serialize, Deserialize)]
struct VectorRepr {
    shape: Shape,
    terms: Vec<TermRepr>,
}

impl TryFrom<VectorRepr> for ModuleVector {
    type Error = Error;
    fn try_from(r: VectorRepr) -> Result<Self> {
        let mut v = ModuleVector::zero(r.shape);
        for t in r.terms {
            v.try_add_term(t.tabloid, &t.coeff)?;
        }
        Ok(v)
    }
}

impl From<ModuleVector> for VectorRepr {
    fn from(v: ModuleVector) -> Self {
        VectorRepr {
            shape: v.shape,
            terms: v
                .terms
                .into_iter()
                .map(|(tabloid, coeff)| TermRepr { tabloid, coeff })
                .collect(),
        }
    }
}

impl ModuleVector {
    pub fn zero(shape: Shape) -> Self {
        ModuleVector {
            shape,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(t: Tabloid) -> Self {
        let mut v = ModuleVector::zero(t.shape());
        v.terms.insert(t, LaurentPoly::one());
        v
    }

    /// `v_λ = v_{T_λ}`
    pub fn highest(shape: Shape) -> Self {
        ModuleVector::basis(Tableau::highest(shape).into_tabloid())
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms in `⊴` order.
    pub fn terms(&self) -> impl Iterator<Item = (&Tabloid, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, t: &Tabloid) -> LaurentPoly {
        self.terms.get(t).cloned().unwrap_or_default()
    }

    fn try_add_term(&mut self, t: Tabloid, c: &LaurentPoly) -> Result<()> {
        if t.shape() != self.shape {
            return Err(Error::ShapeMismatch(format!(
                "tabloid of shape {} in a vector of shape {}",
                t.shape(),
                self.shape
            )));
        }
        if c.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(t).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
        Ok(())
    }

    /// Adds `c · v_t`. Panics if `t` has the wrong shape.
    pub fn add_term(&mut self, t: Tabloid, c: &LaurentPoly) {
        self.try_add_term(t, c)
            .expect("tabloid shape matches the vector");
    }

    pub fn add_scaled(&mut self, other: &ModuleVector, c: &LaurentPoly) {
        assert_eq!(
            self.shape, other.shape,
            "adding vectors of different shapes"
        );
        for (t, d) in &other.terms {
            self.add_term(t.clone(), &(c * d));
        }
    }

    pub fn scaled(&self, c: &LaurentPoly) -> ModuleVector {
        let mut out = ModuleVector::zero(self.shape);
        out.add_scaled(self, c);
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> ModuleVector {
        let mut out = ModuleVector::zero(self.shape);
        for (t, c) in &self.terms {
            out.add_term(t.clone(), &f(c));
        }
        out
    }

    /// Common weight of the terms, or `None` for the zero vector.
    /// Panics when the vector is not homogeneous.
    pub fn weight(&self) -> Option<Weight> {
        let mut weights = self.terms.keys().map(Tabloid::weight);
        let w = weights.next()?;
        assert!(weights.all(|x| x == w), "vector is not weight-homogeneous");
        Some(w)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut weights = self.terms.keys().map(Tabloid::weight);
        match weights.next() {
            None => true,
            Some(w) => weights.all(|x| x == w),
        }
    }

    /// Image in `L / qL` when every coefficient lies in `Z[q]`: the constant
    /// terms, zero entries dropped. `None` if some coefficient has a negative
    /// power of `q`.
    pub fn mod_q(&self) -> Option<BTreeMap<Tabloid, i64>> {
        let mut out = BTreeMap::new();
        for (t, c) in &self.terms {
            if !c.is_polynomial() {
                return None;
            }
            if c.constant_term() != 0 {
                out.insert(t.clone(), c.constant_term());
            }
        }
        Some(out)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("module vectors always serialize")
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (t, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c}) v[{}]", t.reading())?;
        }
        Ok(())
    }
}

/// Action of a generator on one column: list of `(column, coefficient)`.
type ColumnImage = Vec<(Column, LaurentPoly)>;

fn lp(terms: &[(i32, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().copied())
}

fn pair(a: i8, b: i8) -> Column {
    let l = |t| Letter::from_token(t).expect("valid token");
    Column::pair(l(a), l(b)).expect("valid column")
}

fn single_action(node: Node, x: Letter, raise: bool) -> ColumnImage {
    if x == Letter::Zero {
        return match (node, raise) {
            (Node::One, false) => vec![(Column::Single(Letter::BarThree), lp(&[(-1, 1), (1, 1)]))],
            (Node::One, true) => vec![(Column::Single(Letter::Three), lp(&[(-1, 1), (1, 1)]))],
            (Node::Two, _) => vec![],
        };
    }
    let y = if raise { x.raise(node) } else { x.lower(node) };
    y.map(|y| vec![(Column::Single(y), LaurentPoly::one())])
        .unwrap_or_default()
}

/// `f_i v_x` in `V(Λ1)`.
pub fn f_v1(node: Node, x: Letter) -> ModuleVector {
    column_image_vector(Shape::new(1, 0), single_action(node, x, false))
}

/// `e_i v_x` in `V(Λ1)`.
pub fn e_v1(node: Node, x: Letter) -> ModuleVector {
    column_image_vector(Shape::new(1, 0), single_action(node, x, true))
}

fn column_image_vector(shape: Shape, img: ColumnImage) -> ModuleVector {
    let mut v = ModuleVector::zero(shape);
    for (c, p) in img {
        v.add_term(Tabloid::new(vec![c]).expect("one column"), &p);
    }
    v
}

/// The action of `f_1` and `f_2` on the basis `{v_C}` of `W(Λ2)`.
fn f_w2_table(node: Node, c: Column) -> ColumnImage {
    let Column::Pair(a, b) = c else {
        unreachable!("height-2 columns only")
    };
    let key = (a.token(), b.token());
    let one = LaurentPoly::one();
    let q = |e: i32| LaurentPoly::q_pow(e);
    match node {
        Node::One => match key {
            (1, 3) => vec![(pair(2, 3), one), (pair(1, 0), q(1))],
            (1, 0) => vec![(pair(2, 0), one), (pair(1, -3), lp(&[(0, 1), (2, 1)]))],
            (1, -3) => vec![(pair(2, -3), one)],
            (1, -2) => vec![(pair(2, -2), one), (pair(1, -1), q(1))],
            (1, -1) => vec![(pair(2, -1), one)],
            (2, 3) => vec![(pair(2, 0), q(-1))],
            (2, 0) => vec![(pair(2, -3), lp(&[(-2, 1), (0, 1)]))],
            (2, -2) => vec![(pair(2, -1), q(-1))],
            (3, 0) => vec![(pair(0, 0), one), (pair(3, -3), lp(&[(1, 1), (3, 1)]))],
            (3, -3) => vec![(pair(0, -3), one)],
            (3, -2) => vec![(pair(0, -2), one), (pair(3, -1), q(2))],
            (3, -1) => vec![(pair(0, -1), one)],
            // (1 - q^2)(q + q^-1)
            (0, 0) => vec![(pair(0, -3), lp(&[(-1, 1), (3, -1)]))],
            (0, -2) => vec![(pair(-3, -2), lp(&[(-1, 1), (1, 1)])), (pair(0, -1), one)],
            (0, -1) => vec![(pair(-3, -1), lp(&[(-1, 1), (1, 1)]))],
            (-3, -2) => vec![(pair(-3, -1), q(-2))],
            _ => vec![],
        },
        Node::Two => match key {
            (1, 2) => vec![(pair(1, 3), one)],
            (2, -1) => vec![(pair(3, -1), one)],
            (2, 0) => vec![(pair(3, 0), one)],
            (-3, -1) => vec![(pair(-2, -1), one)],
            (0, -3) => vec![(pair(0, -2), one)],
            (1, -3) => vec![(pair(1, -2), one)],
            (2, -3) => vec![(pair(3, -3), one), (pair(2, -2), q(3))],
            (2, -2) => vec![(pair(3, -2), one)],
            (3, -3) => vec![(pair(3, -2), q(-3))],
            _ => vec![],
        },
    }
}

/// `f_i v_C` in `W(Λ2)` for a height-2 column `C`.
pub fn f_w2(node: Node, c: Column) -> Result<ModuleVector> {
    if c.height() != 2 {
        return Err(Error::InvalidColumn(format!("{c} is not of height 2")));
    }
    Ok(column_image_vector(Shape::new(0, 1), f_w2_table(node, c)))
}

/// `v_x ∧ v_y` written in the basis `{v_C}` of `W(Λ2)`.
pub fn wedge_normalize(x: Letter, y: Letter) -> ModuleVector {
    column_image_vector(Shape::new(0, 1), wedge_terms(x, y))
}

fn wedge_terms(x: Letter, y: Letter) -> ColumnImage {
    if let Ok(c) = Column::pair(x, y) {
        return vec![(c, LaurentPoly::one())];
    }
    if x == y {
        return vec![];
    }
    // now y < x: rewrite v_x ∧ v_y with (a, b) = (y, x), a < b
    let (a, b) = (y.token(), x.token());
    let m = |c: i64, e: i32| LaurentPoly::monomial(c, e);
    match (a, b) {
        (1, -1) => vec![
            (pair(1, -1), m(-1, 4)),
            (pair(2, -2), lp(&[(5, 1), (3, -1)])),
            (pair(3, -3), lp(&[(8, -1), (6, 1), (4, 1), (2, 1)])),
            (pair(0, 0), lp(&[(5, -1), (3, 1), (1, -1)])),
        ],
        (2, -2) => vec![
            (pair(2, -2), m(-1, 4)),
            (pair(3, -3), lp(&[(7, 1), (1, -1)])),
            (pair(0, 0), m(1, 4)),
        ],
        (3, -3) => vec![(pair(3, -3), m(-1, 4)), (pair(0, 0), m(-1, 1))],
        (1, 0) => vec![(pair(1, 0), m(-1, 2)), (pair(2, 3), lp(&[(5, 1), (1, -1)]))],
        (1, -3) => vec![
            (pair(1, -3), m(-1, 3)),
            (pair(2, 0), lp(&[(3, 1), (1, -1)])),
        ],
        (1, -2) => vec![
            (pair(1, -2), m(-1, 3)),
            (pair(3, 0), lp(&[(3, 1), (1, -1)])),
        ],
        (0, -1) => vec![
            (pair(0, -1), m(-1, 2)),
            (pair(-3, -2), lp(&[(5, 1), (1, -1)])),
        ],
        (3, -1) => vec![
            (pair(3, -1), m(-1, 3)),
            (pair(0, -2), lp(&[(3, 1), (1, -1)])),
        ],
        (2, -1) => vec![
            (pair(2, -1), m(-1, 3)),
            (pair(0, -3), lp(&[(3, 1), (1, -1)])),
        ],
        _ => {
            let e = if a == 0 || b == 0 {
                2
            } else if (a, b) == (2, 3) || (a, b) == (-3, -2) {
                3
            } else {
                1
            };
            vec![(pair(a, b), m(-1, e))]
        }
    }
}

/// Projects a vector of `V(Λ1)^{⊗2}` (shape `(2, 0)`) onto `W(Λ2)`.
pub fn wedge_project(v: &ModuleVector) -> Result<ModuleVector> {
    if v.shape() != Shape::new(2, 0) {
        return Err(Error::ShapeMismatch(format!(
            "expected shape (2, 0), got {}",
            v.shape()
        )));
    }
    let mut out = ModuleVector::zero(Shape::new(0, 1));
    for (t, c) in v.terms() {
        let w = t.reading();
        out.add_scaled(&wedge_normalize(w[0], w[1]), c);
    }
    Ok(out)
}

fn tensor_square_basis(c: Column) -> ModuleVector {
    let w = c.reading();
    ModuleVector::basis(
        Tabloid::new(vec![Column::Single(w[1]), Column::Single(w[0])]).expect("two singles"),
    )
}

/// `f_i v_C` recomputed as the image of `f_i (v_a ⊗ v_b)` in the quotient
/// `W(Λ2) = V(Λ1)^{⊗2} / N`.
pub fn f_w2_derived(node: Node, c: Column) -> Result<ModuleVector> {
    if c.height() != 2 {
        return Err(Error::InvalidColumn(format!("{c} is not of height 2")));
    }
    wedge_project(&f_tensor(node, &tensor_square_basis(c)))
}

/// `e_i v_C` in `W(Λ2)`, obtained like [`f_w2_derived`] from the action on
/// `V(Λ1)^{⊗2}`.
pub fn e_w2_derived(node: Node, c: Column) -> Result<ModuleVector> {
    if c.height() != 2 {
        return Err(Error::InvalidColumn(format!("{c} is not of height 2")));
    }
    wedge_project(&e_tensor(node, &tensor_square_basis(c)))
}

fn column_action(node: Node, c: Column, raise: bool) -> ColumnImage {
    match (c, raise) {
        (Column::Single(x), _) => single_action(node, x, raise),
        (Column::Pair(..), false) => f_w2_table(node, c),
        (Column::Pair(..), true) => {
            let v = e_w2_derived(node, c).expect("height-2 column");
            v.terms()
                .map(|(t, p)| (t.columns()[0], p.clone()))
                .collect()
        }
    }
}

/// `f_i` on `W(λ)` by the coproduct `f(u ⊗ v) = f u ⊗ v + t_i u ⊗ f v`.
pub fn f_tensor(node: Node, v: &ModuleVector) -> ModuleVector {
    act_tensor(node, v, false)
}

/// `e_i` on `W(λ)` by the coproduct `e(u ⊗ v) = e u ⊗ t_i^{-1} v + u ⊗ e v`.
pub fn e_tensor(node: Node, v: &ModuleVector) -> ModuleVector {
    act_tensor(node, v, true)
}

fn act_tensor(node: Node, v: &ModuleVector, raise: bool) -> ModuleVector {
    let mut out = ModuleVector::zero(v.shape());
    for (t, c) in v.terms() {
        // tensor factors, left to right
        let factors: Vec<Column> = t.columns().iter().rev().copied().collect();
        let weights: Vec<Weight> = factors.iter().map(|f| f.weight()).collect();
        for j in 0..factors.len() {
            let img = column_action(node, factors[j], raise);
            if img.is_empty() {
                continue;
            }
            let t_factor = if raise {
                let right: Weight = weights[j + 1..].iter().copied().sum();
                t_scalar(node, -right)
            } else {
                let left: Weight = weights[..j].iter().copied().sum();
                t_scalar(node, left)
            };
            let base = c * &t_factor;
            for (col, p) in img {
                let mut f = factors.clone();
                f[j] = col;
                f.reverse();
                let tab = Tabloid::new(f).expect("column heights are unchanged");
                out.add_term(tab, &(&base * &p));
            }
        }
    }
    out
}

/// `f_i^{(m)} v = f_i^m v / [m]_i!`
pub fn divided_power(node: Node, m: u32, v: &ModuleVector) -> Result<ModuleVector> {
    let mut cur = v.clone();
    for _ in 0..m {
        cur = f_tensor(node, &cur);
    }
    let den = quantum_factorial(m, node);
    let mut out = ModuleVector::zero(v.shape());
    for (t, c) in cur.terms() {
        out.add_term(t.clone(), &c.exact_divide(&den)?);
    }
    Ok(out)
}

/// `e_i^{(m)} v = e_i^m v / [m]_i!`
pub fn divided_power_e(node: Node, m: u32, v: &ModuleVector) -> Result<ModuleVector> {
    let mut cur = v.clone();
    for _ in 0..m {
        cur = e_tensor(node, &cur);
    }
    let den = quantum_factorial(m, node);
    let mut out = ModuleVector::zero(v.shape());
    for (t, c) in cur.terms() {
        out.add_term(t.clone(), &c.exact_divide(&den)?);
    }
    Ok(out)
}
