//! Letters of the G2 alphabet, words, Kashiwara operators on words and
//! connected components of the crystal graph of all words.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weight::{Node, Weight};

/// A letter of the alphabet `1 < 2 < 3 < 0 < 3̄ < 2̄ < 1̄`. The derived order
/// is the alphabet order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "i8", into = "i8")]
pub enum Letter {
    One,
    Two,
    Three,
    Zero,
    BarThree,
    BarTwo,
    BarOne,
}

/// Labels of the arrows of the crystal `1 -> 2 -> 3 -> 0 -> 3̄ -> 2̄ -> 1̄`.
const CHAIN_LABELS: [Node; 6] = [
    Node::One,
    Node::Two,
    Node::One,
    Node::One,
    Node::Two,
    Node::One,
];

impl Letter {
    pub const ALL: [Letter; 7] = [
        Letter::One,
        Letter::Two,
        Letter::Three,
        Letter::Zero,
        Letter::BarThree,
        Letter::BarTwo,
        Letter::BarOne,
    ];

    /// Position in the alphabet, from 0 (letter 1) to 6 (letter 1̄).
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(k: usize) -> Option<Letter> {
        Letter::ALL.get(k).copied()
    }

    /// Signed token: `1 2 3 0 -3 -2 -1`.
    pub fn token(self) -> i8 {
        match self {
            Letter::One => 1,
            Letter::Two => 2,
            Letter::Three => 3,
            Letter::Zero => 0,
            Letter::BarThree => -3,
            Letter::BarTwo => -2,
            Letter::BarOne => -1,
        }
    }

    pub fn from_token(t: i8) -> Option<Letter> {
        Letter::ALL.into_iter().find(|l| l.token() == t)
    }

    /// The letter `x̄`; `0` is its own bar.
    pub fn bar(self) -> Letter {
        Letter::ALL[6 - self.index()]
    }

    pub fn weight(self) -> Weight {
        match self {
            Letter::One => Weight::new(1, 0),
            Letter::Two => Weight::new(-1, 1),
            Letter::Three => Weight::new(2, -1),
            Letter::Zero => Weight::ZERO,
            Letter::BarThree => Weight::new(-2, 1),
            Letter::BarTwo => Weight::new(1, -1),
            Letter::BarOne => Weight::new(-1, 0),
        }
    }

    pub fn lower(self, node: Node) -> Option<Letter> {
        let k = self.index();
        (k < 6 && CHAIN_LABELS[k] == node).then(|| Letter::ALL[k + 1])
    }

    pub fn raise(self, node: Node) -> Option<Letter> {
        let k = self.index();
        (k > 0 && CHAIN_LABELS[k - 1] == node).then(|| Letter::ALL[k - 1])
    }

    pub fn epsilon(self, node: Node) -> usize {
        CHAIN_LABELS[..self.index()]
            .iter()
            .rev()
            .take_while(|&&l| l == node)
            .count()
    }

    pub fn phi(self, node: Node) -> usize {
        CHAIN_LABELS[self.index()..]
            .iter()
            .take_while(|&&l| l == node)
            .count()
    }

    /// Number of arrows from `self` to `other` along the chain; `None` when
    /// `other` comes before `self`.
    pub fn dist_to(self, other: Letter) -> Option<usize> {
        other.index().checked_sub(self.index())
    }
}

impl TryFrom<i8> for Letter {
    type Error = Error;

    fn try_from(t: i8) -> Result<Self> {
        Letter::from_token(t).ok_or_else(|| Error::InvalidLetter(t.to_string()))
    }
}

impl From<Letter> for i8 {
    fn from(l: Letter) -> i8 {
        l.token()
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.token())
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse::<i8>()
            .ok()
            .and_then(Letter::from_token)
            .ok_or_else(|| Error::InvalidLetter(s.to_string()))
    }
}

/// Which Kashiwara operator to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    /// `ẽ_i`
    Raise,
    /// `f̃_i`
    Lower,
}

/// A word `x1 x2 ... xl`, identified with the vertex `x1 ⊗ x2 ⊗ ... ⊗ xl` of
/// the crystal of `B(Λ1)^{⊗l}`.
///
/// Text form: space separated letter tokens, e.g. `"2 0 -3"`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn push(&mut self, x: Letter) {
        self.0.push(x);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn weight(&self) -> Weight {
        self.0.iter().map(|l| l.weight()).sum()
    }

    /// Every word of length `len`, in lexicographic order.
    pub fn all_of_length(len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| {
                    Letter::ALL.into_iter().map(move |x| {
                        let mut w = w.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
        }
        out
    }

    /// Reduced signature for node `i`: positions of the letters carrying the
    /// uncancelled `-` signs (left to right) and uncancelled `+` signs.
    fn reduced_signature(&self, node: Node) -> (Vec<usize>, Vec<usize>) {
        let mut minus = Vec::new();
        let mut plus: Vec<usize> = Vec::new();
        for (pos, x) in self.0.iter().enumerate() {
            for _ in 0..x.epsilon(node) {
                if plus.pop().is_none() {
                    minus.push(pos);
                }
            }
            for _ in 0..x.phi(node) {
                plus.push(pos);
            }
        }
        (minus, plus)
    }

    /// `f̃_i(w)`, or `None` when it vanishes.
    pub fn lower(&self, node: Node) -> Option<Word> {
        let (_, plus) = self.reduced_signature(node);
        let &pos = plus.first()?;
        let mut out = self.clone();
        out.0[pos] = out.0[pos].lower(node)?;
        Some(out)
    }

    /// `ẽ_i(w)`, or `None` when it vanishes.
    pub fn raise(&self, node: Node) -> Option<Word> {
        let (minus, _) = self.reduced_signature(node);
        let &pos = minus.last()?;
        let mut out = self.clone();
        out.0[pos] = out.0[pos].raise(node)?;
        Some(out)
    }

    pub fn epsilon(&self, node: Node) -> usize {
        self.reduced_signature(node).0.len()
    }

    pub fn phi(&self, node: Node) -> usize {
        self.reduced_signature(node).1.len()
    }

    pub fn is_highest_weight(&self) -> bool {
        Node::ALL.iter().all(|&n| self.epsilon(n) == 0)
    }

    /// Raises greedily to the highest weight vertex of the component, always
    /// using the smallest node whose raising operator acts. Returns that vertex
    /// and the nodes used, in order of application.
    pub fn raise_to_highest_weight(&self) -> (Word, Vec<Node>) {
        let mut w = self.clone();
        let mut record = Vec::new();
        'outer: loop {
            for node in Node::ALL {
                if let Some(u) = w.raise(node) {
                    w = u;
                    record.push(node);
                    continue 'outer;
                }
            }
            return (w, record);
        }
    }
}

impl Deref for Word {
    type Target = [Letter];
    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl From<Word> for String {
    fn from(w: Word) -> String {
        w.to_string()
    }
}

impl TryFrom<String> for Word {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Total weight of a word.
pub fn weight(w: &Word) -> Weight {
    w.weight()
}

/// Applies `ẽ_i` or `f̃_i` to a word.
pub fn apply_kashiwara(w: &Word, node: Node, dir: Direction) -> Option<Word> {
    match dir {
        Direction::Raise => w.raise(node),
        Direction::Lower => w.lower(node),
    }
}

/// `(ε_i(w), φ_i(w))`
pub fn string_stats(w: &Word, node: Node) -> (usize, usize) {
    let (minus, plus) = w.reduced_signature(node);
    (minus.len(), plus.len())
}

/// A connected component of the crystal graph of words.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentGraph {
    /// Vertices in lexicographic order.
    pub vertices: Vec<Word>,
    /// Arrows `(source, i, f̃_i(source))`, sorted.
    pub edges: Vec<(Word, Node, Word)>,
    pub highest_weight: Word,
}

impl ComponentGraph {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.vertices.binary_search(w).is_ok()
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph component {\n");
        for v in &self.vertices {
            s.push_str(&format!("  \"{v}\";\n"));
        }
        for (a, i, b) in &self.edges {
            s.push_str(&format!("  \"{a}\" -> \"{b}\" [label=\"{i}\"];\n"));
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("component graphs always serialize")
    }
}

/// The connected component `B(w)` of the crystal graph containing `w`.
pub fn component_graph(w: &Word) -> ComponentGraph {
    let mut seen: BTreeSet<Word> = BTreeSet::new();
    let mut queue = VecDeque::from([w.clone()]);
    seen.insert(w.clone());
    while let Some(v) = queue.pop_front() {
        for node in Node::ALL {
            for u in [v.raise(node), v.lower(node)].into_iter().flatten() {
                if seen.insert(u.clone()) {
                    queue.push_back(u);
                }
            }
        }
    }
    let mut edges = Vec::new();
    for v in &seen {
        for node in Node::ALL {
            if let Some(u) = v.lower(node) {
                edges.push((v.clone(), node, u));
            }
        }
    }
    edges.sort();
    let highest_weight = w.raise_to_highest_weight().0;
    ComponentGraph {
        vertices: seen.into_iter().collect(),
        edges,
        highest_weight,
    }
}

/// Whether two words occupy the same place in isomorphic components.
pub fn similar(w1: &Word, w2: &Word) -> bool {
    let (h1, r1) = w1.raise_to_highest_weight();
    let (h2, r2) = w2.raise_to_highest_weight();
    r1 == r2 && h1.weight() == h2.weight()
}

/// Image of `w` under the crystal isomorphism from `B(w)` onto the component
/// whose highest weight vertex is `target_hw`.
pub fn crystal_iso(w: &Word, target_hw: &Word) -> Result<Word> {
    if !target_hw.is_highest_weight() {
        return Err(Error::NotHighestWeight(target_hw.to_string()));
    }
    let (hw, record) = w.raise_to_highest_weight();
    if hw.weight() != target_hw.weight() {
        return Err(Error::WeightMismatch {
            source_hw: hw.to_string(),
            source_weight: hw.weight().to_string(),
            target: target_hw.to_string(),
            target_weight: target_hw.weight().to_string(),
        });
    }
    let mut image = target_hw.clone();
    for &node in record.iter().rev() {
        image = image.lower(node).ok_or_else(|| Error::LoweringDied {
            word: image.to_string(),
            node: node.index(),
        })?;
    }
    Ok(image)
}

/// Maps every vertex of `B(source_hw)` to its image in `B(target_hw)`.
pub fn crystal_iso_table(source_hw: &Word, target_hw: &Word) -> Result<BTreeMap<Word, Word>> {
    component_graph(source_hw)
        .vertices
        .into_iter()
        .map(|v| crystal_iso(&v, target_hw).map(|img| (v, img)))
        .collect()
}

/// Parses a word, panicking on malformed input. Meant for literals in tests
/// and fixtures.
pub fn word(s: &str) -> Word {
    s.parse()
        .unwrap_or_else(|e| panic!("bad word literal {s:?}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn letter_strings() {
        use Letter::*;
        assert_eq!(Three.phi(Node::One), 2);
        assert_eq!(Zero.epsilon(Node::One), 1);
        assert_eq!(Zero.phi(Node::One), 1);
        assert_eq!(BarThree.epsilon(Node::One), 2);
        assert_eq!(Two.epsilon(Node::One), 1);
        assert_eq!(Three.epsilon(Node::Two), 1);
        assert_eq!(One.lower(Node::One), Some(Two));
        assert_eq!(One.lower(Node::Two), None);
        assert_eq!(BarOne.lower(Node::One), None);
    }

    #[test]
    fn letter_weights_drop_by_simple_roots() {
        for x in Letter::ALL {
            assert_eq!(x.bar().weight(), -x.weight());
            for n in Node::ALL {
                if let Some(y) = x.lower(n) {
                    assert_eq!(y.weight(), x.weight() - n.simple_root());
                }
                assert_eq!(x.weight().pairing(n), x.phi(n) as i32 - x.epsilon(n) as i32);
            }
        }
    }

    #[test]
    fn word_weights() {
        assert_eq!(word("0").weight(), Weight::ZERO);
        assert_eq!(word("1 2").weight(), Weight::new(0, 1));
        assert_eq!(word("-3").weight(), Weight::new(-2, 1));
    }

    #[test]
    fn kashiwara_examples() {
        assert_eq!(word("1").lower(Node::One), Some(word("2")));
        assert_eq!(word("2 1").lower(Node::One), Some(word("2 2")));
        assert_eq!(word("1").lower(Node::Two), None);
        assert_eq!(word("3 -1").lower(Node::One), Some(word("0 -1")));
        assert_eq!(string_stats(&word("2"), Node::One), (1, 0));
        assert_eq!(string_stats(&word("3"), Node::Two), (1, 0));
        assert_eq!(string_stats(&Word::empty(), Node::One), (0, 0));
    }

    #[test]
    fn component_sizes() {
        assert_eq!(component_graph(&word("1 1")).len(), 27);
        assert_eq!(component_graph(&word("1 2")).len(), 14);
        assert_eq!(component_graph(&word("1 -1")).len(), 1);
        assert_eq!(component_graph(&word("2 1")).highest_weight, word("1 1"));
    }

    #[test]
    fn similarity_examples() {
        assert!(similar(&word("1 0"), &word("1")));
        assert!(!similar(&word("1 2"), &word("2 1")));
        assert!(similar(&word("3 -2 0"), &word("3 -2 0")));
    }

    #[test]
    fn iso_examples() {
        assert_eq!(
            crystal_iso(&word("1 2 3"), &word("1 1 0")).unwrap(),
            word("1 1 0")
        );
        assert_eq!(
            crystal_iso(&word("2 3 -3"), &word("1 1 0")).unwrap(),
            word("0 1 -3")
        );
        assert_eq!(crystal_iso(&word("2 -2"), &word("1")).unwrap(), word("0"));
        assert!(matches!(
            crystal_iso(&word("1 2"), &word("1")),
            Err(Error::WeightMismatch { .. })
        ));
        assert!(matches!(
            crystal_iso(&word("1"), &word("2")),
            Err(Error::NotHighestWeight(_))
        ));
    }

    #[test]
    fn text_round_trip() {
        let w = word("2 0 -3 -1");
        assert_eq!(w.to_string(), "2 0 -3 -1");
        assert_eq!(Word::empty().to_string(), "");
        assert_eq!("".parse::<Word>().unwrap(), Word::empty());
        assert_eq!("1 4".parse::<Word>(), Err(Error::InvalidLetter("4".into())));
        assert_eq!(serde_json::to_string(&w).unwrap(), "\"2 0 -3 -1\"");
    }

    #[test]
    fn dot_and_json_export() {
        let g = component_graph(&word("1"));
        let dot = g.to_dot();
        assert!(dot.contains("\"1\" -> \"2\" [label=\"1\"];"));
        assert!(dot.contains("\"2\" -> \"3\" [label=\"2\"];"));
        let js: serde_json::Value = serde_json::from_str(&g.to_json()).unwrap();
        assert_eq!(js["vertices"].as_array().unwrap().len(), 7);
        assert_eq!(js["edges"][0], serde_json::json!(["1", 1, "2"]));
        assert_eq!(js["highest_weight"], "1");
    }

    fn arb_word(max: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec(0usize..7, 0..=max)
            .prop_map(|v| v.into_iter().map(|k| Letter::ALL[k]).collect())
    }

    proptest! {
        #[test]
        fn raise_inverts_lower(w in arb_word(8), two in any::<bool>()) {
            let n = if two { Node::Two } else { Node::One };
            if let Some(u) = w.lower(n) {
                prop_assert_eq!(u.raise(n), Some(w.clone()));
                prop_assert_eq!(u.weight(), w.weight() - n.simple_root());
            }
            if let Some(u) = w.raise(n) {
                prop_assert_eq!(u.lower(n), Some(w.clone()));
            }
        }

        #[test]
        fn string_lengths_match_repeated_application(w in arb_word(6), two in any::<bool>()) {
            let n = if two { Node::Two } else { Node::One };
            let count = |dir| {
                let mut k = 0;
                let mut cur = w.clone();
                while let Some(u) = apply_kashiwara(&cur, n, dir) {
                    cur = u;
                    k += 1;
                }
                k
            };
            prop_assert_eq!(string_stats(&w, n), (count(Direction::Raise), count(Direction::Lower)));
            prop_assert_eq!(w.phi(n) as i32 - w.epsilon(n) as i32, w.weight().pairing(n));
        }
    }
}
