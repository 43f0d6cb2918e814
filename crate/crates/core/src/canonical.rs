//! The canonical basis of `V(λ)` inside `W(λ)`: the monomial vectors `A(T)`,
//! the global basis of `V(Λ2)` along crystal paths, and the triangular
//! correction producing `G(T)` and the matrix `D = [d_{τ,T}(q)]`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::crystal::{word, Letter, Word};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::modules::{divided_power, f_v1, f_w2, ModuleVector};
use crate::tableaux::{enumerate_tableaux, enumerate_tabloids, Column, Shape, Tableau, Tabloid};
use crate::weight::Node;

/// A product `f_{i1}^{(r1)} ... f_{im}^{(rm)}` of divided powers, listed
/// outermost first: `factors[0]` is applied last.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MonomialWord {
    factors: Vec<(Node, u32)>,
}

impl MonomialWord {
    pub fn new(factors: Vec<(Node, u32)>) -> Self {
        MonomialWord { factors }
    }

    pub fn factors(&self) -> &[(Node, u32)] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    /// Whether consecutive factors always use different nodes.
    pub fn alternates(&self) -> bool {
        self.factors.windows(2).all(|w| w[0].0 != w[1].0)
    }

    /// Applies the factors right to left to `v`.
    pub fn apply(&self, v: &ModuleVector) -> Result<ModuleVector> {
        let mut cur = v.clone();
        for &(node, r) in self.factors.iter().rev() {
            cur = divided_power(node, r, &cur)?;
        }
        Ok(cur)
    }

    /// Groups a sequence of single steps, in the order they are applied,
    /// into maximal blocks of equal nodes.
    pub fn from_steps(steps: &[Node]) -> Self {
        let mut blocks: Vec<(Node, u32)> = Vec::new();
        for &n in steps {
            match blocks.last_mut() {
                Some((m, r)) if *m == n => *r += 1,
                _ => blocks.push((n, 1)),
            }
        }
        blocks.reverse();
        MonomialWord { factors: blocks }
    }
}

impl fmt::Display for MonomialWord {
    /// `f1^(4) f2^(5)`, or `1` for the empty product.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(n, r)| format!("f{n}^({r})"))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

fn is_highest_column(c: Column) -> bool {
    match c {
        Column::Single(x) => x == Letter::One,
        Column::Pair(a, b) => a == Letter::One && b == Letter::Two,
    }
}

/// Whether `f_i v_C` vanishes in `V(Λ1)` or `W(Λ2)`.
fn module_f_vanishes(node: Node, c: Column) -> Result<bool> {
    Ok(match c {
        Column::Single(x) => f_v1(node, x).is_zero(),
        Column::Pair(..) => f_w2(node, c)?.is_zero(),
    })
}

/// The column whose reading is `w`.
fn column_of(w: &Word) -> Result<Column> {
    Column::from_cells(w.letters())
}

/// One step `T -> T1` of the descent: the node, the exponent and `T1`.
fn descent_step(t: &Tableau) -> Result<(Node, u32, Tableau)> {
    let cols = t.columns();
    let k = cols
        .iter()
        .rposition(|&c| !is_highest_column(c))
        .ok_or_else(|| Error::Invariant(format!("{} is already highest", t.reading())))?;
    let wk = cols[k].reading();
    let node = if wk == word("0 -2") {
        Node::One
    } else {
        let raisable: Vec<Node> = Node::ALL
            .into_iter()
            .filter(|&n| wk.epsilon(n) > 0)
            .collect();
        match raisable.as_slice() {
            [n] => *n,
            _ => {
                return Err(Error::Invariant(format!(
                    "column reading `{wk}` does not have exactly one raising node"
                )))
            }
        }
    };
    let mut l = k;
    while l > 0 && module_f_vanishes(node, cols[l])? && cols[l - 1].reading().epsilon(node) > 0 {
        l -= 1;
    }
    let mut new_cols = cols.to_vec();
    let mut r = 0u32;
    for col in &mut new_cols[l..=k] {
        let mut w = col.reading();
        let eps = w.epsilon(node);
        for _ in 0..eps {
            w = w
                .raise(node)
                .expect("epsilon counts the available raisings");
        }
        r += eps as u32;
        *col = column_of(&w)?;
    }
    let t1 = Tableau::new(new_cols).map_err(|e| {
        Error::Invariant(format!(
            "descent from {} left the tableaux: {e}",
            t.reading()
        ))
    })?;
    if r == 0 {
        return Err(Error::Invariant(format!(
            "descent from {} made no progress",
            t.reading()
        )));
    }
    Ok((node, r, t1))
}

/// The monomial word of `A(T)` together with the intermediate tableaux
/// `T1, T2, ..., T_λ` of the descent.
pub fn monomial_descent(t: &Tableau) -> Result<(MonomialWord, Vec<Tableau>)> {
    let target = Tableau::highest(t.shape());
    let mut factors = Vec::new();
    let mut steps = Vec::new();
    let mut cur = t.clone();
    // every step raises the weight by a positive multiple of a simple root
    let bound = 6 * t.shape().boxes() + 1;
    while cur != target {
        if factors.len() > bound {
            return Err(Error::Invariant(format!(
                "descent from {} does not terminate",
                t.reading()
            )));
        }
        let (node, r, next) = descent_step(&cur)?;
        factors.push((node, r));
        steps.push(next.clone());
        cur = next;
    }
    Ok((MonomialWord::new(factors), steps))
}

/// The monomial word `A(T) = f_{i1}^{(r1)} ... f_{im}^{(rm)} v_λ`.
pub fn monomial_sequence(t: &Tableau) -> Result<MonomialWord> {
    monomial_descent(t).map(|(m, _)| m)
}

/// Checks the three properties of a monomial vector: weight homogeneity
/// with the weight of `T`, unit coefficient on `v_T`, and support in `τ ⊴ T`.
fn check_monomial(t: &Tableau, v: &ModuleVector) -> Result<()> {
    let fail = |what: &str| Err(Error::Invariant(format!("A({}) {what}", t.reading())));
    if !v.is_homogeneous() || v.weight() != Some(t.weight()) {
        return fail("is not homogeneous of the weight of T");
    }
    if !v.coeff(t.as_tabloid()).is_one() {
        return fail("does not have coefficient 1 on v_T");
    }
    if v.terms().any(|(tau, _)| tau > t.as_tabloid()) {
        return fail("has support above T");
    }
    Ok(())
}

/// The monomial vector `A(T)` in `W(λ)`.
pub fn a_vector(t: &Tableau) -> Result<ModuleVector> {
    let m = monomial_sequence(t)?;
    let v = m.apply(&ModuleVector::highest(t.shape()))?;
    check_monomial(t, &v)?;
    Ok(v)
}

/// All f̃-paths from `1 2` to `target` in `B(Λ2)`, as node sequences in the
/// order of application.
fn column_paths(target: &Word) -> Vec<Vec<Node>> {
    fn dfs(cur: &Word, target: &Word, path: &mut Vec<Node>, out: &mut Vec<Vec<Node>>) {
        if cur == target {
            out.push(path.clone());
            return;
        }
        for n in Node::ALL {
            if let Some(next) = cur.lower(n) {
                path.push(n);
                dfs(&next, target, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    dfs(&word("1 2"), target, &mut Vec::new(), &mut out);
    out
}

/// Steps `f̃2, f̃1^3, f̃2^2, f̃1` from `1 2` to `0 2̄`, in the order of
/// application.
const ZERO_BAR_TWO_PATH: [Node; 7] = [
    Node::Two,
    Node::One,
    Node::One,
    Node::One,
    Node::Two,
    Node::Two,
    Node::One,
];

/// The path `w(C) = f̃_{i1}^{p1} ... f̃_{ir}^{pr}(1 2)` used for the global
/// basis of `V(Λ2)`. Paths to `0 2̄` and below are not unique; they are
/// routed through `0 2̄ = f̃1 f̃2^2 f̃1^3 f̃2 (1 2)`, after which the path is
/// unique again.
pub fn column_path(c: Column) -> Result<MonomialWord> {
    if c.height() != 2 || !c.is_admissible() {
        return Err(Error::NotAdmissible(c.to_string()));
    }
    let w = c.reading();
    let zero_bar_two = word("0 -2");
    let through = |p: &Vec<Node>| {
        let mut cur = word("1 2");
        for (k, &n) in p.iter().enumerate() {
            if cur == zero_bar_two {
                return p[..k] == ZERO_BAR_TWO_PATH;
            }
            cur = cur.lower(n).expect("paths follow crystal edges");
        }
        cur != zero_bar_two || p[..] == ZERO_BAR_TWO_PATH
    };
    let paths: Vec<Vec<Node>> = column_paths(&w).into_iter().filter(through).collect();
    match paths.as_slice() {
        [p] => Ok(MonomialWord::from_steps(p)),
        _ => Err(Error::Invariant(format!(
            "{} paths from 1 2 to `{w}`",
            paths.len()
        ))),
    }
}

/// `G(C) = f_{i1}^{(p1)} ... f_{ir}^{(pr)} (v_1 ∧ v_2)` for an admissible
/// height-2 column, along [`column_path`].
pub fn column_global_basis(c: Column) -> Result<ModuleVector> {
    column_path(c)?.apply(&ModuleVector::highest(Shape::new(0, 1)))
}

/// The matrix `D = [d_{τ,T}(q)]` expressing the canonical basis `G(T)` on the
/// tabloid basis of `W(λ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisMatrix {
    shape: Shape,
    tableaux: Vec<Tableau>,
    rows: Vec<Tabloid>,
    columns: Vec<ModuleVector>,
    corrections: Vec<Vec<(usize, LaurentPoly)>>,
}

#[derive(Serialize)]
struct BasisMatrixRepr<'a> {
    shape: Shape,
    tableaux: &'a [Tableau],
    rows: &'a [Tabloid],
    /// `entries[r][c] = d_{rows[r], tableaux[c]}`
    entries: Vec<Vec<LaurentPoly>>,
}

impl BasisMatrix {
    pub fn shape(&self) -> Shape {
        self.shape
    }

    /// The tableaux `T^(1) ⊴ ... ⊴ T^(t)` indexing the columns.
    pub fn tableaux(&self) -> &[Tableau] {
        &self.tableaux
    }

    /// All tabloids of the shape, indexing the rows.
    pub fn rows(&self) -> &[Tabloid] {
        &self.rows
    }

    /// `G(T^(k))`.
    pub fn global_basis(&self, k: usize) -> &ModuleVector {
        &self.columns[k]
    }

    pub fn global_bases(&self) -> &[ModuleVector] {
        &self.columns
    }

    /// `G(T)` for a tableau of the shape.
    pub fn global_basis_of(&self, t: &Tableau) -> Option<&ModuleVector> {
        self.tableaux
            .iter()
            .position(|s| s == t)
            .map(|k| &self.columns[k])
    }

    /// The nonzero `γ_j` subtracted while computing `G(T^(k))`, as
    /// `(j, γ_j)` in the order they were found.
    pub fn corrections(&self, k: usize) -> &[(usize, LaurentPoly)] {
        &self.corrections[k]
    }

    pub fn entry(&self, tau: &Tabloid, k: usize) -> LaurentPoly {
        self.columns[k].coeff(tau)
    }

    /// CSV: a header `tabloid,<tableau readings>` and one row per tabloid.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("tabloid");
        for t in &self.tableaux {
            out.push(',');
            out.push_str(&t.reading().to_string());
        }
        out.push('\n');
        for tau in &self.rows {
            out.push_str(&tau.reading().to_string());
            for g in &self.columns {
                out.push(',');
                out.push_str(&g.coeff(tau).to_string());
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let entries = self
            .rows
            .iter()
            .map(|tau| self.columns.iter().map(|g| g.coeff(tau)).collect())
            .collect();
        let repr = BasisMatrixRepr {
            shape: self.shape,
            tableaux: &self.tableaux,
            rows: &self.rows,
            entries,
        };
        serde_json::to_string_pretty(&repr).expect("basis matrices always serialize")
    }
}

/// Checks the properties of a column of `D`: `d_{T,T} = 1`, and for `τ ≠ T`
/// `d_{τ,T} ∈ qZ[q]`, with `τ` of the weight of `T` and `τ ⊴ T`.
pub fn check_global_basis(t: &Tableau, g: &ModuleVector) -> Result<()> {
    let fail = |what: String| Err(Error::Invariant(format!("G({}) {what}", t.reading())));
    if !g.coeff(t.as_tabloid()).is_one() {
        return fail("has a diagonal entry other than 1".into());
    }
    for (tau, d) in g.terms() {
        if tau == t.as_tabloid() {
            continue;
        }
        if !d.in_q_zq() {
            return fail(format!("has entry {d} outside qZ[q] at {}", tau.reading()));
        }
        if tau.weight() != t.weight() {
            return fail(format!(
                "has support at {} of another weight",
                tau.reading()
            ));
        }
        if tau > t.as_tabloid() {
            return fail(format!("has support at {} above T", tau.reading()));
        }
    }
    Ok(())
}

/// Runs the triangular correction on `v` against the already computed
/// `G(T^(1)), ..., G(T^(i))`, returning the residual and the nonzero `γ_j`.
pub fn correct(
    tableaux: &[Tableau],
    bases: &[ModuleVector],
    v: &ModuleVector,
) -> Result<(ModuleVector, Vec<(usize, LaurentPoly)>)> {
    let mut residual = v.clone();
    let mut gammas = Vec::new();
    for j in (0..bases.len()).rev() {
        let alpha = residual.coeff(tableaux[j].as_tabloid());
        let gamma = alpha.gamma_symmetrize();
        if !gamma.is_bar_invariant() {
            return Err(Error::Invariant(format!(
                "γ = {gamma} is not bar-invariant"
            )));
        }
        if !gamma.is_zero() {
            residual.add_scaled(&bases[j], &-&gamma);
            gammas.push((j, gamma));
        }
    }
    Ok((residual, gammas))
}

/// The canonical basis of `V(λ)`, `λ = l1 Λ1 + l2 Λ2`, on the tabloid basis
/// of `W(λ)`.
pub fn canonical_basis(shape: Shape) -> Result<BasisMatrix> {
    let tableaux = enumerate_tableaux(shape);
    let mut columns: Vec<ModuleVector> = Vec::with_capacity(tableaux.len());
    let mut corrections = Vec::with_capacity(tableaux.len());
    for t in &tableaux {
        let a = a_vector(t)?;
        let (g, gammas) = correct(&tableaux, &columns, &a)?;
        check_global_basis(t, &g)?;
        columns.push(g);
        corrections.push(gammas);
    }
    Ok(BasisMatrix {
        shape,
        tableaux,
        rows: enumerate_tabloids(shape),
        columns,
        corrections,
    })
}

/// The sparse content of `G(T)` keyed by tabloid reading.
pub fn readings(v: &ModuleVector) -> BTreeMap<Word, LaurentPoly> {
    v.terms().map(|(t, c)| (t.reading(), c.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(s: &str) -> Column {
        Column::from_cells(word(s).letters()).unwrap()
    }

    fn tab(cols: &[&str]) -> Tableau {
        Tableau::new(cols.iter().map(|s| col(s)).collect()).unwrap()
    }

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn expect(v: &ModuleVector, terms: &[(&str, &str)]) {
        let want: BTreeMap<Word, LaurentPoly> =
            terms.iter().map(|(w, c)| (word(w), lp(c))).collect();
        assert_eq!(readings(v), want);
    }

    #[test]
    fn highest_tableau_has_empty_sequence() {
        for shape in [Shape::new(1, 0), Shape::new(0, 1), Shape::new(2, 1)] {
            let t = Tableau::highest(shape);
            assert!(monomial_sequence(&t).unwrap().is_empty());
            assert_eq!(a_vector(&t).unwrap(), ModuleVector::highest(shape));
        }
    }

    #[test]
    fn single_column_sequence() {
        let m = monomial_sequence(&tab(&["1 3"])).unwrap();
        assert_eq!(m.factors(), &[(Node::Two, 1)]);
    }

    #[test]
    fn worked_example_descent() {
        let t = tab(&["3 -2", "-3 -1", "-1"]);
        let (m, steps) = monomial_descent(&t).unwrap();
        let n = |i: u8| Node::from_index(i).unwrap();
        let want: Vec<(Node, u32)> = [(1, 4), (2, 5), (1, 8), (2, 3), (1, 1)]
            .iter()
            .map(|&(i, r)| (n(i), r))
            .collect();
        assert_eq!(m.factors(), want.as_slice());
        assert_eq!(steps[0], tab(&["3 -2", "3 -2", "-2"]));
        assert_eq!(steps[1], tab(&["2 -3", "2 -3", "-3"]));
        assert_eq!(steps[2], tab(&["1 3", "1 3", "3"]));
        assert_eq!(steps[3], tab(&["1 2", "1 2", "2"]));
        assert_eq!(steps[4], Tableau::highest(t.shape()));
    }

    #[test]
    fn column_global_basis_examples() {
        expect(
            &column_global_basis(col("2 3")).unwrap(),
            &[("2 3", "1"), ("1 0", "q")],
        );
        expect(
            &column_global_basis(col("0 0")).unwrap(),
            &[
                ("0 0", "1"),
                ("3 -3", "q^3 + q"),
                ("2 -2", "q^2"),
                ("1 -1", "q^3"),
            ],
        );
        expect(&column_global_basis(col("1 2")).unwrap(), &[("1 2", "1")]);
        expect(
            &column_global_basis(col("3 -3")).unwrap(),
            &[("3 -3", "1"), ("2 -2", "q^3")],
        );
    }

    #[test]
    fn paths_branch_only_at_zero_bar_two() {
        let zero_bar_two = word("0 -2");
        let below = component_below(&zero_bar_two);
        for c in Column::admissible_pairs() {
            let n = column_paths(&c.reading()).len();
            if below.contains(&c.reading()) {
                assert!(n > 1, "{c}");
            } else {
                assert_eq!(n, 1, "{c}");
            }
            column_path(c).unwrap();
        }
        assert_eq!(
            column_path(col("0 -2")).unwrap().factors(),
            &[
                (Node::One, 1),
                (Node::Two, 2),
                (Node::One, 3),
                (Node::Two, 1)
            ]
        );
    }

    fn component_below(w: &Word) -> Vec<Word> {
        let mut out = vec![w.clone()];
        let mut k = 0;
        while k < out.len() {
            for n in Node::ALL {
                if let Some(x) = out[k].lower(n) {
                    if !out.contains(&x) {
                        out.push(x);
                    }
                }
            }
            k += 1;
        }
        out
    }

    #[test]
    fn shape_one_zero_is_identity() {
        let d = canonical_basis(Shape::new(1, 0)).unwrap();
        assert_eq!(d.tableaux().len(), 7);
        for (k, t) in d.tableaux().iter().enumerate() {
            assert_eq!(
                d.global_basis(k),
                &ModuleVector::basis(t.as_tabloid().clone())
            );
        }
    }

    #[test]
    fn csv_has_header_and_one_row_per_tabloid() {
        let d = canonical_basis(Shape::new(0, 1)).unwrap();
        let csv = d.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 23);
        assert!(lines[0].starts_with("tabloid,1 2,"));
        assert_eq!(lines[0].split(',').count(), 15);
    }

    #[test]
    fn monomial_word_from_steps() {
        let m = MonomialWord::from_steps(&[Node::Two, Node::One, Node::One, Node::Two]);
        assert_eq!(
            m.factors(),
            &[(Node::Two, 1), (Node::One, 2), (Node::Two, 1)]
        );
        assert_eq!(m.to_string(), "f2^(1) f1^(2) f2^(1)");
    }
}
