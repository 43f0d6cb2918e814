//! Columns, tabloids, tableaux of type G2 and oscillating tableaux.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::crystal::{Letter, Word};
use crate::error::{Error, Result};
use crate::weight::Weight;

/// Number of arrows from `a` to `b` in the crystal of `B(Λ1)`; requires
/// `a ⪯ b`.
pub fn dist(a: Letter, b: Letter) -> usize {
    a.dist_to(b)
        .unwrap_or_else(|| panic!("dist({a}, {b}) needs {a} to precede {b}"))
}

/// A column of height 1 or 2, read top to bottom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Letter>", into = "Vec<Letter>")]
pub enum Column {
    Single(Letter),
    Pair(Letter, Letter),
}

impl Column {
    /// A height-2 column `(top, bottom)`; needs `top ≺ bottom` or both `0`.
    pub fn pair(top: Letter, bottom: Letter) -> Result<Column> {
        if top < bottom || (top == Letter::Zero && bottom == Letter::Zero) {
            Ok(Column::Pair(top, bottom))
        } else {
            Err(Error::InvalidColumn(format!("({top}, {bottom})")))
        }
    }

    pub fn from_cells(cells: &[Letter]) -> Result<Column> {
        match *cells {
            [x] => Ok(Column::Single(x)),
            [a, b] => Column::pair(a, b),
            _ => Err(Error::InvalidColumn(format!("{} cells", cells.len()))),
        }
    }

    pub fn height(self) -> usize {
        match self {
            Column::Single(_) => 1,
            Column::Pair(..) => 2,
        }
    }

    pub fn top(self) -> Letter {
        match self {
            Column::Single(x) | Column::Pair(x, _) => x,
        }
    }

    pub fn cells(self) -> Vec<Letter> {
        match self {
            Column::Single(x) => vec![x],
            Column::Pair(a, b) => vec![a, b],
        }
    }

    /// Reading `w(C)`, top to bottom.
    pub fn reading(self) -> Word {
        Word::new(self.cells())
    }

    pub fn weight(self) -> Weight {
        self.cells().into_iter().map(Letter::weight).sum()
    }

    pub fn is_admissible(self) -> bool {
        match self {
            Column::Single(_) => true,
            Column::Pair(a, b) => {
                let bound = if matches!(a, Letter::One | Letter::Zero) {
                    2
                } else {
                    3
                };
                dist(a, b) <= bound
            }
        }
    }

    /// The 22 height-2 columns in lexicographic order of their readings.
    pub fn all_pairs() -> Vec<Column> {
        let mut out = Vec::new();
        for a in Letter::ALL {
            for b in Letter::ALL {
                if let Ok(c) = Column::pair(a, b) {
                    out.push(c);
                }
            }
        }
        out
    }

    /// The 14 admissible height-2 columns, ordered by reading.
    pub fn admissible_pairs() -> Vec<Column> {
        Column::all_pairs()
            .into_iter()
            .filter(|c| c.is_admissible())
            .collect()
    }

    /// The 7 height-1 columns, ordered by letter.
    pub fn singles() -> Vec<Column> {
        Letter::ALL.into_iter().map(Column::Single).collect()
    }
}

impl Ord for Column {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.height(), self.cells()).cmp(&(other.height(), other.cells()))
    }
}

impl PartialOrd for Column {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<Letter>> for Column {
    type Error = Error;
    fn try_from(v: Vec<Letter>) -> Result<Self> {
        Column::from_cells(&v)
    }
}

impl From<Column> for Vec<Letter> {
    fn from(c: Column) -> Self {
        c.cells()
    }
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Column::Single(x) => write!(f, "({x})"),
            Column::Pair(a, b) => write!(f, "({a}, {b})"),
        }
    }
}

/// Whether `c1 ⪯ c2`, i.e. the juxtaposition `c1 c2` can occur in a tableau.
/// Both columns are expected to be admissible.
pub fn columns_ordered(c1: Column, c2: Column) -> bool {
    let leq_not_zero = |x: Letter, y: Letter| x <= y && !(x == Letter::Zero && y == Letter::Zero);
    match (c1, c2) {
        (Column::Single(a), Column::Single(b)) => leq_not_zero(a, b),
        (Column::Pair(a, _), Column::Single(c)) => leq_not_zero(a, c),
        (Column::Pair(a, b), Column::Pair(c, d)) => {
            if !(leq_not_zero(a, c) && leq_not_zero(b, d)) {
                return false;
            }
            match a {
                Letter::Two | Letter::Three | Letter::Zero => dist(a, d) >= 3,
                Letter::BarThree => dist(a, d) >= 2,
                _ => true,
            }
        }
        (Column::Single(_), Column::Pair(..)) => false,
    }
}

/// Shape `λ1 Λ1 + λ2 Λ2`: `l1` columns of height 1 and `l2` of height 2.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct Shape {
    pub l1: usize,
    pub l2: usize,
}

impl Shape {
    pub const EMPTY: Shape = Shape { l1: 0, l2: 0 };

    pub const fn new(l1: usize, l2: usize) -> Self {
        Shape { l1, l2 }
    }

    pub fn boxes(self) -> usize {
        self.l1 + 2 * self.l2
    }

    pub fn columns(self) -> usize {
        self.l1 + self.l2
    }

    /// The dominant weight `l1 Λ1 + l2 Λ2`.
    pub fn weight(self) -> Weight {
        Weight::new(self.l1 as i32, self.l2 as i32)
    }
}

impl From<(usize, usize)> for Shape {
    fn from((l1, l2): (usize, usize)) -> Self {
        Shape { l1, l2 }
    }
}

impl From<Shape> for (usize, usize) {
    fn from(s: Shape) -> Self {
        (s.l1, s.l2)
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.l1, self.l2)
    }
}

/// A filling of `Y(λ)` by arbitrary columns, height-2 columns first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TabloidRepr", into = "TabloidRepr")]
pub struct Tabloid {
    columns: Vec<Column>,
}

#[derive(Serialize, Deserialize)]
struct TabloidRepr {
    shape: Shape,
    columns: Vec<Column>,
}

impl TryFrom<TabloidRepr> for Tabloid {
    type Error = Error;
    fn try_from(r: TabloidRepr) -> Result<Self> {
        let t = Tabloid::new(r.columns)?;
        if t.shape() != r.shape {
            return Err(Error::ShapeMismatch(format!(
                "declared {} but columns give {}",
                r.shape,
                t.shape()
            )));
        }
        Ok(t)
    }
}

impl From<Tabloid> for TabloidRepr {
    fn from(t: Tabloid) -> Self {
        TabloidRepr {
            shape: t.shape(),
            columns: t.columns,
        }
    }
}

impl Tabloid {
    pub fn new(columns: Vec<Column>) -> Result<Tabloid> {
        if columns.windows(2).any(|w| w[0].height() < w[1].height()) {
            return Err(Error::InvalidTabloid(
                "height-2 columns must come before height-1 columns".into(),
            ));
        }
        Ok(Tabloid { columns })
    }

    pub fn empty() -> Tabloid {
        Tabloid {
            columns: Vec::new(),
        }
    }

    /// Builds a tabloid from its rows; the bottom row may not be longer than
    /// the top row.
    pub fn from_rows(top: &[Letter], bottom: &[Letter]) -> Result<Tabloid> {
        if bottom.len() > top.len() {
            return Err(Error::InvalidTabloid(
                "bottom row longer than top row".into(),
            ));
        }
        let columns = top
            .iter()
            .enumerate()
            .map(|(k, &a)| match bottom.get(k) {
                Some(&b) => Column::pair(a, b),
                None => Ok(Column::Single(a)),
            })
            .collect::<Result<Vec<_>>>()?;
        Tabloid::new(columns)
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn into_columns(self) -> Vec<Column> {
        self.columns
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn shape(&self) -> Shape {
        let l2 = self.columns.iter().filter(|c| c.height() == 2).count();
        Shape::new(self.columns.len() - l2, l2)
    }

    /// `w(C_s) ... w(C_1)`: columns read right to left, each top to bottom.
    pub fn reading(&self) -> Word {
        self.columns.iter().rev().flat_map(|c| c.cells()).collect()
    }

    pub fn weight(&self) -> Weight {
        self.columns.iter().map(|c| c.weight()).sum()
    }

    pub fn top_row(&self) -> Vec<Letter> {
        self.columns.iter().map(|c| c.top()).collect()
    }

    pub fn bottom_row(&self) -> Vec<Letter> {
        self.columns
            .iter()
            .filter_map(|c| match c {
                Column::Pair(_, b) => Some(*b),
                Column::Single(_) => None,
            })
            .collect()
    }

    /// Rebuilds a tabloid of the given shape from its reading.
    pub fn from_reading(shape: Shape, w: &Word) -> Result<Tabloid> {
        if w.len() != shape.boxes() {
            return Err(Error::ShapeMismatch(format!(
                "word of length {} for shape {shape}",
                w.len()
            )));
        }
        let mut cols = Vec::with_capacity(shape.columns());
        let mut rest: &[Letter] = w;
        for _ in 0..shape.l1 {
            cols.push(Column::Single(rest[0]));
            rest = &rest[1..];
        }
        for _ in 0..shape.l2 {
            cols.push(Column::pair(rest[0], rest[1])?);
            rest = &rest[2..];
        }
        cols.reverse();
        Tabloid::new(cols)
    }

    /// Whether the columns are admissible and pairwise ordered.
    pub fn is_tableau(&self) -> bool {
        validate_tableau(self)
    }
}

impl Ord for Tabloid {
    /// Shape first, then the lexicographic order of readings.
    fn cmp(&self, other: &Self) -> Ordering {
        (self.shape(), self.reading()).cmp(&(other.shape(), other.reading()))
    }
}

impl PartialOrd for Tabloid {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Tabloid {
    /// Two rows of right-aligned tokens, top row first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let render = |row: Vec<Letter>| {
            row.iter()
                .map(|x| format!("{:>2}", x.token()))
                .collect::<Vec<_>>()
                .join(" ")
        };
        if self.columns.is_empty() {
            return f.write_str("(empty)");
        }
        write!(f, "{}", render(self.top_row()))?;
        let bottom = self.bottom_row();
        if !bottom.is_empty() {
            write!(f, "\n{}", render(bottom))?;
        }
        Ok(())
    }
}

/// Whether every column is admissible and `C_i ⪯ C_{i+1}` for all `i`.
pub fn validate_tableau(t: &Tabloid) -> bool {
    t.columns.iter().all(|c| c.is_admissible())
        && t.columns.windows(2).all(|w| columns_ordered(w[0], w[1]))
}

/// Reading of a tabloid.
pub fn reading(t: &Tabloid) -> Word {
    t.reading()
}

/// The order `⊴` on tabloids of one shape.
pub fn tabloid_compare(t1: &Tabloid, t2: &Tabloid) -> Ordering {
    t1.reading().cmp(&t2.reading())
}

/// A tableau of type G2.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Tabloid", into = "Tabloid")]
pub struct Tableau(Tabloid);

impl Tableau {
    pub fn new(columns: Vec<Column>) -> Result<Tableau> {
        Tableau::try_from(Tabloid::new(columns)?)
    }

    pub fn empty() -> Tableau {
        Tableau(Tabloid::empty())
    }

    pub fn from_rows(top: &[Letter], bottom: &[Letter]) -> Result<Tableau> {
        Tableau::try_from(Tabloid::from_rows(top, bottom)?)
    }

    /// `T_λ`: the k-th row is filled with the letter k.
    pub fn highest(shape: Shape) -> Tableau {
        let mut cols = vec![Column::Pair(Letter::One, Letter::Two); shape.l2];
        cols.extend(std::iter::repeat_n(Column::Single(Letter::One), shape.l1));
        Tableau(Tabloid { columns: cols })
    }

    pub fn as_tabloid(&self) -> &Tabloid {
        &self.0
    }

    pub fn into_tabloid(self) -> Tabloid {
        self.0
    }
}

impl TryFrom<Tabloid> for Tableau {
    type Error = Error;
    fn try_from(t: Tabloid) -> Result<Self> {
        if let Some(c) = t.columns.iter().find(|c| !c.is_admissible()) {
            return Err(Error::NotAdmissible(c.to_string()));
        }
        if let Some(w) = t.columns.windows(2).find(|w| !columns_ordered(w[0], w[1])) {
            return Err(Error::InvalidTableau(format!(
                "columns {} and {} are not ordered",
                w[0], w[1]
            )));
        }
        Ok(Tableau(t))
    }
}

impl From<Tableau> for Tabloid {
    fn from(t: Tableau) -> Tabloid {
        t.0
    }
}

impl Deref for Tableau {
    type Target = Tabloid;
    fn deref(&self) -> &Tabloid {
        &self.0
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Every tableau of type G2 of the given shape, sorted by `⊴`.
pub fn enumerate_tableaux(shape: Shape) -> Vec<Tableau> {
    let mut slots = vec![Column::admissible_pairs(); shape.l2];
    slots.extend(std::iter::repeat_n(Column::singles(), shape.l1));
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(slots.len());
    fn dfs(slots: &[Vec<Column>], cur: &mut Vec<Column>, out: &mut Vec<Tableau>) {
        let k = cur.len();
        if k == slots.len() {
            out.push(Tableau(Tabloid {
                columns: cur.clone(),
            }));
            return;
        }
        for &c in &slots[k] {
            if k == 0 || columns_ordered(cur[k - 1], c) {
                cur.push(c);
                dfs(slots, cur, out);
                cur.pop();
            }
        }
    }
    dfs(&slots, &mut cur, &mut out);
    out.sort_by(|a, b| tabloid_compare(a, b));
    out
}

/// Every tabloid of the given shape (all `22^l2 · 7^l1` fillings), sorted by `⊴`.
pub fn enumerate_tabloids(shape: Shape) -> Vec<Tabloid> {
    let mut out = vec![Vec::new()];
    let choices: Vec<Vec<Column>> = std::iter::repeat_n(Column::all_pairs(), shape.l2)
        .chain(std::iter::repeat_n(Column::singles(), shape.l1))
        .collect();
    for slot in choices {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<Column>| {
                slot.iter().map(move |&c| {
                    let mut p = prefix.clone();
                    p.push(c);
                    p
                })
            })
            .collect();
    }
    let mut out: Vec<Tabloid> = out.into_iter().map(|columns| Tabloid { columns }).collect();
    out.sort_by(tabloid_compare);
    out
}

/// Shapes reachable from `from` in one step of an oscillating tableau.
///
/// Adding or deleting a box, moving a box between heights, or keeping the
/// shape. The shape can only stay the same when it has a height-1 column:
/// inserting a letter into a tableau without one always changes the shape.
pub fn oscillating_steps(from: Shape) -> Vec<Shape> {
    let (l1, l2) = (from.l1 as i64, from.l2 as i64);
    let mut moves = vec![
        (l1 + 1, l2),
        (l1 - 1, l2 + 1),
        (l1 - 1, l2),
        (l1 + 1, l2 - 1),
        (l1 + 2, l2 - 1),
        (l1 - 2, l2 + 1),
    ];
    if l1 >= 1 {
        moves.push((l1, l2));
    }
    let mut out: Vec<Shape> = moves
        .into_iter()
        .filter(|&(a, b)| a >= 0 && b >= 0)
        .map(|(a, b)| Shape::new(a as usize, b as usize))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// A sequence of shapes `Q_1, ..., Q_l` with `Q_1 = (1, 0)` and legal steps.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Shape>", into = "Vec<Shape>")]
pub struct OscillatingTableau {
    shapes: Vec<Shape>,
}

impl OscillatingTableau {
    pub fn new(shapes: Vec<Shape>) -> Result<Self> {
        if let Some(&first) = shapes.first() {
            if first != Shape::new(1, 0) {
                return Err(Error::InvalidOscillatingTableau(format!(
                    "first shape is {first}, expected (1, 0)"
                )));
            }
        }
        for (k, w) in shapes.windows(2).enumerate() {
            if !oscillating_steps(w[0]).contains(&w[1]) {
                return Err(Error::InvalidOscillatingTableau(format!(
                    "step {} from {} to {} is not allowed",
                    k + 1,
                    w[0],
                    w[1]
                )));
            }
        }
        Ok(OscillatingTableau { shapes })
    }

    pub fn shapes(&self) -> &[Shape] {
        &self.shapes
    }

    pub fn len(&self) -> usize {
        self.shapes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shapes.is_empty()
    }

    /// Last shape, or the empty shape for the empty sequence.
    pub fn final_shape(&self) -> Shape {
        self.shapes.last().copied().unwrap_or(Shape::EMPTY)
    }
}

impl TryFrom<Vec<Shape>> for OscillatingTableau {
    type Error = Error;
    fn try_from(v: Vec<Shape>) -> Result<Self> {
        OscillatingTableau::new(v)
    }
}

impl From<OscillatingTableau> for Vec<Shape> {
    fn from(q: OscillatingTableau) -> Self {
        q.shapes
    }
}

/// Number of oscillating tableaux of length `len`, grouped by final shape.
pub fn count_oscillating_by_final_shape(len: usize) -> BTreeMap<Shape, u64> {
    let mut counts = BTreeMap::new();
    if len == 0 {
        counts.insert(Shape::EMPTY, 1);
        return counts;
    }
    counts.insert(Shape::new(1, 0), 1u64);
    for _ in 1..len {
        let mut next = BTreeMap::new();
        for (&s, &c) in &counts {
            for t in oscillating_steps(s) {
                *next.entry(t).or_insert(0) += c;
            }
        }
        counts = next;
    }
    counts
}

/// Every oscillating tableau of length `len`, in lexicographic order.
pub fn enumerate_oscillating(len: usize) -> Vec<OscillatingTableau> {
    if len == 0 {
        return vec![OscillatingTableau::default()];
    }
    let mut seqs = vec![vec![Shape::new(1, 0)]];
    for _ in 1..len {
        seqs = seqs
            .into_iter()
            .flat_map(|s| {
                oscillating_steps(*s.last().unwrap())
                    .into_iter()
                    .map(move |t| {
                        let mut s = s.clone();
                        s.push(t);
                        s
                    })
            })
            .collect();
    }
    seqs.into_iter()
        .map(|shapes| OscillatingTableau { shapes })
        .collect()
}
