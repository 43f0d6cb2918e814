//! The plactic monoid of type G2: relations, insertion of a letter into a
//! column and into a tableau, P- and Q-symbols and the Robinson-Schensted
//! correspondence.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::crystal::{component_graph, crystal_iso, word, Letter, Word};
use crate::error::{Error, Result};
use crate::tableaux::{Column, OscillatingTableau, Shape, Tableau, Tabloid};

/// The set `S` and its image under `Θ`, a bijection onto `B(12)`.
const THETA: [(&str, &str); 14] = [
    ("2 1", "1 2"),
    ("3 1", "1 3"),
    ("0 1", "2 3"),
    ("-3 1", "2 0"),
    ("-3 2", "2 -3"),
    ("-2 1", "3 0"),
    ("-2 2", "3 -3"),
    ("-1 1", "0 0"),
    ("-1 2", "0 -3"),
    ("-2 3", "3 -2"),
    ("-1 3", "0 -2"),
    ("-1 0", "-3 -2"),
    ("-1 -3", "-3 -1"),
    ("-1 -2", "-2 -1"),
];

/// Relation `R1`: two-letter words congruent to a single letter.
const R1: [(&str, &str); 7] = [
    ("1 0", "1"),
    ("1 -3", "2"),
    ("1 -2", "3"),
    ("2 -2", "0"),
    ("0 -1", "-1"),
    ("3 -1", "-2"),
    ("2 -1", "-3"),
];

/// `Θ(w)` for `w ∈ S`.
pub fn theta(w: &Word) -> Result<Word> {
    THETA
        .iter()
        .find(|(s, _)| word(s) == *w)
        .map(|(_, t)| word(t))
        .ok_or_else(|| Error::OutOfDomain(w.to_string()))
}

/// `Θ^{-1}(w)` for `w ∈ B(12)`.
pub fn theta_inv(w: &Word) -> Result<Word> {
    THETA
        .iter()
        .find(|(_, t)| word(t) == *w)
        .map(|(s, _)| word(s))
        .ok_or_else(|| Error::OutOfDomain(w.to_string()))
}

/// The set `S`.
pub fn theta_domain() -> Vec<Word> {
    THETA.iter().map(|(s, _)| word(s)).collect()
}

/// Three-letter words on which the closed formulas for `R3` and `R4` land in
/// a different connected component (`1 2 3 -> 2 1 3` and `-3 -1 -2 -> -3 -2 -1`).
/// For these the right-hand side is the image under the crystal isomorphism
/// the relation is meant to describe.
const FORMULA_EXCEPTIONS: [(&str, &str); 2] = [("1 2 3", "1 1 0"), ("-3 -1 -2", "-1 -3 -2")];

/// Right-hand side of `R3` (`r4 = false`) or `R4` (`r4 = true`) given by the
/// closed formulas in terms of `Θ`, without the exceptions.
pub fn relation_formula(w: &Word, r4: bool) -> Result<Word> {
    if w.len() != 3 {
        return Err(Error::OutOfDomain(w.to_string()));
    }
    let ab = Word::new(w[0..2].to_vec());
    let bc = Word::new(w[1..3].to_vec());
    let c = Word::new(vec![w[2]]);
    if !r4 {
        if let Ok(t) = theta(&bc) {
            return Ok(Word::new(vec![w[0]]).concat(&t));
        }
    }
    Ok(theta_inv(&ab)?.concat(&c))
}

/// Every instance `(lhs, rhs)` of the defining relations `R1` to `R4`.
pub fn relation_instances() -> Vec<(Word, Word)> {
    let mut out: Vec<(Word, Word)> = R1.iter().map(|(l, r)| (word(l), word(r))).collect();
    out.push((word("1 -1"), Word::empty()));
    let b12 = component_graph(&word("1 2"));
    let b11 = component_graph(&word("1 1"));
    let rhs = |w: &Word, r4: bool| {
        FORMULA_EXCEPTIONS
            .iter()
            .find(|(l, _)| word(l) == *w)
            .map(|(_, r)| word(r))
            .unwrap_or_else(|| relation_formula(w, r4).expect("ab lies in B(12)"))
    };
    for w in Word::all_of_length(3) {
        let ab = Word::new(w[0..2].to_vec());
        let bc = Word::new(w[1..3].to_vec());
        if b12.contains(&ab) && b11.contains(&bc) {
            out.push((w.clone(), rhs(&w, false)));
        }
        if b12.contains(&ab) && b12.contains(&bc) {
            out.push((w.clone(), rhs(&w, true)));
        }
    }
    out
}

/// The seven kinds of insertion of a letter into an admissible column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InsertionCase {
    I,
    Ii,
    Iii,
    Iv,
    V,
    Vi,
    Vii,
}

impl InsertionCase {
    pub fn is_contraction(self) -> bool {
        matches!(
            self,
            InsertionCase::Iii | InsertionCase::Iv | InsertionCase::Vi | InsertionCase::Vii
        )
    }
}

impl fmt::Display for InsertionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            InsertionCase::I => "i",
            InsertionCase::Ii => "ii",
            InsertionCase::Iii => "iii",
            InsertionCase::Iv => "iv",
            InsertionCase::V => "v",
            InsertionCase::Vi => "vi",
            InsertionCase::Vii => "vii",
        };
        f.write_str(s)
    }
}

/// What happened when inserting a letter into a column.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InsertionOutcome {
    pub case: InsertionCase,
    /// Column left in place of the original one: `(a, x)` in case (ii),
    /// `(a', b')` in case (v).
    pub replaced_column: Option<Column>,
    /// Letters passed on to the rest of the tableau, in insertion order.
    pub bumped: Vec<Letter>,
    pub contraction: bool,
}

fn expect_hw(w: &Word, hw: &str, case: InsertionCase) -> Result<()> {
    let (h, _) = w.raise_to_highest_weight();
    if h == word(hw) {
        Ok(())
    } else {
        Err(Error::Invariant(format!(
            "insertion case {case}: `{w}` has highest weight vertex `{h}`, expected `{hw}`"
        )))
    }
}

fn outcome(
    case: InsertionCase,
    replaced_column: Option<Column>,
    bumped: Vec<Letter>,
) -> InsertionOutcome {
    InsertionOutcome {
        case,
        replaced_column,
        bumped,
        contraction: case.is_contraction(),
    }
}

/// Inserts `x` into the admissible column `c`. The returned fragment is the
/// tableau `x -> C`; in case (v) it consists of the new column followed by
/// the bumped box.
pub fn insert_letter(x: Letter, c: Column) -> Result<(Tabloid, InsertionOutcome)> {
    use InsertionCase::*;
    if !c.is_admissible() {
        return Err(Error::NotAdmissible(c.to_string()));
    }
    match c {
        Column::Single(a) => {
            let ax = Word::new(vec![a, x]);
            if ax == word("1 -1") {
                return Ok((Tabloid::empty(), outcome(Iv, None, vec![])));
            }
            let (hw, _) = ax.raise_to_highest_weight();
            if hw == word("1 1") {
                // the row whose reading is `a x`
                let frag = Tabloid::new(vec![Column::Single(x), Column::Single(a)])?;
                Ok((frag, outcome(I, None, vec![])))
            } else if hw == word("1 2") {
                let col = Column::pair(a, x)?;
                Ok((Tabloid::new(vec![col])?, outcome(Ii, Some(col), vec![])))
            } else if hw == word("1 0") {
                let a1 = crystal_iso(&ax, &word("1"))?[0];
                Ok((
                    Tabloid::new(vec![Column::Single(a1)])?,
                    outcome(Iii, None, vec![a1]),
                ))
            } else {
                Err(Error::Invariant(format!(
                    "`{ax}` has unexpected highest weight vertex `{hw}`"
                )))
            }
        }
        Column::Pair(a, b) => {
            let abx = Word::new(vec![a, b, x]);
            match Column::pair(b, x) {
                Err(_) => {
                    expect_hw(&abx, "1 2 1", V)?;
                    let img = crystal_iso(&abx, &word("1 1 2"))?;
                    let col = Column::pair(img[1], img[2])?;
                    let frag = Tabloid::new(vec![col, Column::Single(img[0])])?;
                    Ok((frag, outcome(V, Some(col), vec![img[0]])))
                }
                Ok(bx) if bx.is_admissible() => {
                    expect_hw(&abx, "1 2 3", Vi)?;
                    let u = crystal_iso(&abx, &word("1 1 0"))?;
                    let tail = crystal_iso(&Word::new(u[1..].to_vec()), &word("1"))?[0];
                    // the row with reading `u1 tail`
                    let frag = Tabloid::new(vec![Column::Single(tail), Column::Single(u[0])])?;
                    Ok((frag, outcome(Vi, None, vec![u[0], tail])))
                }
                Ok(_) => {
                    expect_hw(&abx, "1 2 -2", Vii)?;
                    let x1 = crystal_iso(&abx, &word("1"))?[0];
                    Ok((
                        Tabloid::new(vec![Column::Single(x1)])?,
                        outcome(Vii, None, vec![x1]),
                    ))
                }
            }
        }
    }
}

fn insert_columns(x: Letter, cols: &[Column]) -> Result<Vec<Column>> {
    use InsertionCase::*;
    let Some((&first, rest)) = cols.split_first() else {
        return Ok(vec![Column::Single(x)]);
    };
    let (frag, out) = insert_letter(x, first)?;
    match out.case {
        I | Ii | Iv => {
            let mut v = frag.into_columns();
            v.extend_from_slice(rest);
            Ok(v)
        }
        Iii | Vii => insert_columns(out.bumped[0], rest),
        V => {
            let mut v = vec![out.replaced_column.expect("case (v) keeps a column")];
            v.extend(insert_columns(out.bumped[0], rest)?);
            Ok(v)
        }
        Vi => {
            let inner = insert_columns(out.bumped[0], rest)?;
            insert_columns(out.bumped[1], &inner)
        }
    }
}

/// `x -> T`
pub fn insert_into_tableau(x: Letter, t: &Tableau) -> Result<Tableau> {
    let cols = insert_columns(x, t.columns())?;
    Tableau::new(cols)
        .map_err(|e| Error::Invariant(format!("inserting {x} into\n{t}\ngave no tableau: {e}")))
}

/// The P-symbol: insert the letters of `w` from left to right.
pub fn p_symbol(w: &Word) -> Result<Tableau> {
    w.iter()
        .try_fold(Tableau::empty(), |t, &x| insert_into_tableau(x, &t))
}

fn p_and_q(w: &Word) -> Result<(Tableau, Vec<Shape>)> {
    let mut t = Tableau::empty();
    let mut shapes = Vec::with_capacity(w.len());
    for &x in w.iter() {
        t = insert_into_tableau(x, &t)?;
        shapes.push(t.shape());
    }
    Ok((t, shapes))
}

/// The Q-symbol: shapes of the successive P-symbols of the prefixes of `w`.
pub fn q_symbol(w: &Word) -> Result<OscillatingTableau> {
    let (_, shapes) = p_and_q(w)?;
    OscillatingTableau::new(shapes).map_err(|e| Error::Invariant(format!("Q-symbol of `{w}`: {e}")))
}

/// `(P(w), Q(w))`
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RSPair {
    pub p: Tableau,
    pub q: OscillatingTableau,
}

pub fn rs_pair(w: &Word) -> Result<RSPair> {
    let (p, shapes) = p_and_q(w)?;
    let q = OscillatingTableau::new(shapes)
        .map_err(|e| Error::Invariant(format!("Q-symbol of `{w}`: {e}")))?;
    Ok(RSPair { p, q })
}

/// The unique word whose Robinson-Schensted pair is `pair`.
pub fn rs_inverse(pair: &RSPair) -> Result<Word> {
    if pair.p.shape() != pair.q.final_shape() {
        return Err(Error::ShapeMismatch(format!(
            "P has shape {} but Q ends at {}",
            pair.p.shape(),
            pair.q.final_shape()
        )));
    }
    fn search(pair: &RSPair, t: &Tableau, prefix: &mut Vec<Letter>) -> Result<Option<Word>> {
        let k = prefix.len();
        if k == pair.q.len() {
            return Ok((*t == pair.p).then(|| Word::new(prefix.clone())));
        }
        for x in Letter::ALL {
            let next = insert_into_tableau(x, t)?;
            if next.shape() == pair.q.shapes()[k] {
                prefix.push(x);
                if let Some(w) = search(pair, &next, prefix)? {
                    return Ok(Some(w));
                }
                prefix.pop();
            }
        }
        Ok(None)
    }
    search(pair, &Tableau::empty(), &mut Vec::new())?
        .ok_or_else(|| Error::NoPreimage(format!("P =\n{}\nQ = {:?}", pair.p, pair.q.shapes())))
}

/// Whether `w1 ≡ w2` in the plactic monoid.
pub fn congruent(w1: &Word, w2: &Word) -> Result<bool> {
    Ok(p_symbol(w1)? == p_symbol(w2)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::similar;
    use Letter::*;

    #[test]
    fn theta_examples() {
        assert_eq!(theta(&word("2 1")).unwrap(), word("1 2"));
        assert_eq!(theta(&word("-1 -2")).unwrap(), word("-2 -1"));
        assert_eq!(theta_inv(&word("1 2")).unwrap(), word("2 1"));
        assert!(matches!(theta(&word("1 2")), Err(Error::OutOfDomain(_))));
    }

    #[test]
    fn theta_is_a_bijection_onto_b12_preserving_position() {
        let b12 = component_graph(&word("1 2"));
        let mut image: Vec<Word> = theta_domain().iter().map(|w| theta(w).unwrap()).collect();
        image.sort();
        assert_eq!(image, b12.vertices);
        for w in theta_domain() {
            assert_eq!(theta_inv(&theta(&w).unwrap()).unwrap(), w);
        }
    }

    #[test]
    fn insert_letter_examples() {
        let (frag, out) = insert_letter(Zero, Column::Single(One)).unwrap();
        assert_eq!(out.case, InsertionCase::Iii);
        assert_eq!(frag.columns(), &[Column::Single(One)]);

        let (frag, out) = insert_letter(BarOne, Column::Single(One)).unwrap();
        assert_eq!(out.case, InsertionCase::Iv);
        assert!(frag.is_empty());

        let (_, out) = insert_letter(BarThree, Column::pair(Zero, BarTwo).unwrap()).unwrap();
        assert_eq!(out.case, InsertionCase::V);
        assert_eq!(
            out.replaced_column,
            Some(Column::pair(Three, BarThree).unwrap())
        );
        // weight of `0 -2 -3` is (-1, 0) = wt(3) + wt(-3) + wt(-1)
        assert_eq!(out.bumped, vec![BarOne]);

        let (frag, out) = insert_letter(BarOne, Column::pair(One, Two).unwrap()).unwrap();
        assert_eq!(out.case, InsertionCase::Vii);
        assert_eq!(frag.columns(), &[Column::Single(Two)]);

        assert!(matches!(
            insert_letter(One, Column::pair(One, Zero).unwrap()),
            Err(Error::NotAdmissible(_))
        ));
    }

    #[test]
    fn worked_example() {
        let t = Tableau::from_rows(&[Two, Zero, BarThree], &[Zero, BarTwo, BarOne]).unwrap();
        let r = insert_into_tableau(BarTwo, &t).unwrap();
        let expected =
            Tableau::from_rows(&[Two, BarThree, BarOne, BarOne], &[Three, BarTwo]).unwrap();
        assert_eq!(r, expected);
    }

    #[test]
    fn small_symbols() {
        assert_eq!(p_symbol(&word("1 -1")).unwrap(), Tableau::empty());
        assert_eq!(p_symbol(&word("2 1")).unwrap().reading(), word("2 1"));
        assert_eq!(
            insert_into_tableau(One, &p_symbol(&word("1")).unwrap())
                .unwrap()
                .reading(),
            word("1 1")
        );
        assert_eq!(q_symbol(&word("1")).unwrap().shapes(), &[Shape::new(1, 0)]);
        assert_eq!(
            q_symbol(&word("1 -1")).unwrap().shapes(),
            &[Shape::new(1, 0), Shape::new(0, 0)]
        );
        assert_eq!(
            q_symbol(&word("1 2")).unwrap().shapes(),
            &[Shape::new(1, 0), Shape::new(0, 1)]
        );
        let empty = rs_pair(&Word::empty()).unwrap();
        assert_eq!(empty.p, Tableau::empty());
        assert!(empty.q.is_empty());
    }

    #[test]
    fn congruence_examples() {
        assert!(congruent(&word("1 0"), &word("1")).unwrap());
        // both are highest weight vertices of weight Λ1 + Λ2
        assert!(congruent(&word("1 2 1"), &word("1 1 2")).unwrap());
        assert!(similar(&word("1 2 1"), &word("1 1 2")));
        assert!(!congruent(&word("1 2"), &word("2 1")).unwrap());
        assert!(congruent(&word("1 2 3"), &word("1 1 0")).unwrap());
    }

    #[test]
    fn rs_round_trip() {
        let w = word("-2 3 1");
        assert_eq!(rs_inverse(&rs_pair(&w).unwrap()).unwrap(), w);
        let bad = RSPair {
            p: Tableau::highest(Shape::new(0, 1)),
            q: OscillatingTableau::new(vec![Shape::new(1, 0)]).unwrap(),
        };
        assert!(matches!(rs_inverse(&bad), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn relation_instances_are_similar() {
        let rels = relation_instances();
        assert!(rels.contains(&(word("1 0"), word("1"))));
        assert!(rels.contains(&(word("1 -1"), Word::empty())));
        for (l, r) in &rels {
            assert!(similar(l, r), "{l} ~ {r}");
        }
    }

    #[test]
    fn formulas_fail_exactly_on_the_exceptions() {
        let b12 = component_graph(&word("1 2"));
        let b11 = component_graph(&word("1 1"));
        let mut failing = Vec::new();
        for w in Word::all_of_length(3) {
            let ab = Word::new(w[0..2].to_vec());
            let bc = Word::new(w[1..3].to_vec());
            for (r4, applies) in [(false, b11.contains(&bc)), (true, b12.contains(&bc))] {
                if b12.contains(&ab) && applies && !similar(&w, &relation_formula(&w, r4).unwrap())
                {
                    failing.push(w.to_string());
                }
            }
        }
        let expected: Vec<String> = FORMULA_EXCEPTIONS
            .iter()
            .map(|(l, _)| l.to_string())
            .collect();
        assert_eq!(failing, expected);
    }

    #[test]
    fn rs_json() {
        let pair = rs_pair(&word("1 2")).unwrap();
        let js = serde_json::to_string(&pair).unwrap();
        assert_eq!(
            js,
            r#"{"p":{"shape":[0,1],"columns":[[1,2]]},"q":[[1,0],[0,1]]}"#
        );
    }
}
