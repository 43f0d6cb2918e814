//! Tableaux and oscillating tableaux counted against the Weyl dimension
//! formula and against the number of words.

use g2_crystal::crystal::Word;
use g2_crystal::tableaux::{
    count_oscillating_by_final_shape, enumerate_oscillating, enumerate_tableaux, enumerate_tabloids,
};
use g2_crystal::{Column, Shape, Tableau, Tabloid};

/// Weyl dimension formula for `V(aΛ1 + bΛ2)`, `α1` short.
fn weyl_dimension(a: u64, b: u64) -> u64 {
    (a + 1) * (b + 1) * (a + b + 2) * (a + 2 * b + 3) * (a + 3 * b + 4) * (2 * a + 3 * b + 5) / 120
}

#[test]
fn tableaux_count_the_weyl_dimension() {
    for a in 0..=4 {
        for b in 0..=2 {
            let n = enumerate_tableaux(Shape::new(a, b)).len() as u64;
            assert_eq!(n, weyl_dimension(a as u64, b as u64), "shape ({a}, {b})");
        }
    }
    assert_eq!(weyl_dimension(0, 2), 77);
}

#[test]
fn readings_are_distinct_and_highest_in_their_component() {
    for shape in [Shape::new(2, 0), Shape::new(1, 1), Shape::new(0, 2)] {
        let tableaux = enumerate_tableaux(shape);
        let hw = Tableau::highest(shape).reading();
        for t in &tableaux {
            assert_eq!(
                t.reading().raise_to_highest_weight().0,
                hw,
                "`{}`",
                t.reading()
            );
            assert_eq!(
                Tabloid::from_reading(shape, &t.reading()).unwrap(),
                *t.as_tabloid()
            );
        }
        let mut readings: Vec<Word> = tableaux.iter().map(|t| t.reading()).collect();
        readings.dedup();
        assert_eq!(readings.len(), tableaux.len());
    }
}

#[test]
fn tabloid_census() {
    assert_eq!(Column::all_pairs().len(), 22);
    assert_eq!(Column::admissible_pairs().len(), 14);
    assert_eq!(enumerate_tabloids(Shape::new(0, 2)).len(), 484);
    assert_eq!(enumerate_tabloids(Shape::new(1, 1)).len(), 154);
}

#[test]
fn oscillating_tableaux_weighted_by_tableaux_count_words() {
    for len in 0..=5usize {
        let total: u64 = count_oscillating_by_final_shape(len)
            .iter()
            .map(|(s, n)| n * weyl_dimension(s.l1 as u64, s.l2 as u64))
            .sum();
        assert_eq!(total, 7u64.pow(len as u32), "length {len}");
    }
    for q in enumerate_oscillating(3) {
        assert_eq!(q.len(), 3);
        assert_eq!(q.shapes()[0], Shape::new(1, 0));
    }
}
