//! Finite groups as validated Cayley tables.
//!
//! A [`GroupTable`] stores the full multiplication table of a group of order
//! `n` with the identity at index 0. Every constructor in [`constructors`]
//! realizes its presentation directly on a canonical element ordering and then
//! runs the same validation as user-supplied tables, so all downstream
//! algorithms see one uniform representation.

pub mod catalog;
pub mod constructors;
mod cyclic;
pub mod io;
mod iso;
pub mod selector;

use std::fmt;

use thiserror::Error;

pub use catalog::{catalog, CURATED_EXTENSION_LIMIT, EXHAUSTIVE_CATALOG_LIMIT};
pub use constructors::{
    direct_product, make_alternating, make_cyclic, make_dicyclic, make_dihedral, make_symmetric,
};
pub use cyclic::MaximalCyclicFamily;
pub use iso::{are_isomorphic, find_isomorphism, order_profile};

/// Errors raised while constructing or ingesting a group.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("invalid parameter for {family}: {reason}")]
    InvalidParameter { family: &'static str, reason: String },
    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("entry at row {row}, column {col} is {value}, outside 0..{order}")]
    OutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("row {row} repeats element {value} (columns {first_col} and {col})")]
    RowNotPermutation { row: usize, first_col: usize, col: usize, value: usize },
    #[error("column {col} repeats element {value} (rows {first_row} and {row})")]
    ColumnNotPermutation { col: usize, first_row: usize, row: usize, value: usize },
    #[error("no two-sided identity element in the table")]
    NoIdentity,
    #[error("associativity fails for ({i}*{j})*{k} != {i}*({j}*{k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("element {x} has no inverse")]
    NoInverse { x: usize },
    #[error("expected {expected} labels, found {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("element index {x} out of range for a group of order {order}")]
    ElementOutOfRange { x: usize, order: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown group selector `{0}`")]
    UnknownSelector(String),
}

pub type Result<T> = std::result::Result<T, GroupError>;

/// A finite group given by its Cayley table. Index 0 is always the identity.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    table: Vec<usize>,
    labels: Vec<String>,
    name: String,
}

impl GroupTable {
    /// Checks every group axiom on `raw` and returns the validated group.
    ///
    /// If the identity is not at index 0 the table is relabeled by swapping
    /// the identity with element 0 (labels move along with their elements).
    pub fn validate(
        raw: &[Vec<usize>],
        labels: Option<Vec<String>>,
        name: impl Into<String>,
    ) -> Result<Self> {
        let n = raw.len();
        if n == 0 {
            return Err(GroupError::InvalidParameter {
                family: "table",
                reason: "a group has at least one element".into(),
            });
        }
        for (row, r) in raw.iter().enumerate() {
            if r.len() != n {
                return Err(GroupError::NotSquare { row, len: r.len(), expected: n });
            }
        }
        for (row, r) in raw.iter().enumerate() {
            for (col, &value) in r.iter().enumerate() {
                if value >= n {
                    return Err(GroupError::OutOfRange { row, col, value, order: n });
                }
            }
        }
        for (row, r) in raw.iter().enumerate() {
            let mut seen = vec![usize::MAX; n];
            for (col, &value) in r.iter().enumerate() {
                if seen[value] != usize::MAX {
                    return Err(GroupError::RowNotPermutation {
                        row,
                        first_col: seen[value],
                        col,
                        value,
                    });
                }
                seen[value] = col;
            }
        }
        for col in 0..n {
            let mut seen = vec![usize::MAX; n];
            for (row, r) in raw.iter().enumerate() {
                let value = r[col];
                if seen[value] != usize::MAX {
                    return Err(GroupError::ColumnNotPermutation {
                        col,
                        first_row: seen[value],
                        row,
                        value,
                    });
                }
                seen[value] = row;
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|j| raw[e][j] == j && raw[j][e] == j))
            .ok_or(GroupError::NoIdentity)?;
        for i in 0..n {
            for j in 0..n {
                let ij = raw[i][j];
                for k in 0..n {
                    if raw[ij][k] != raw[i][raw[j][k]] {
                        return Err(GroupError::NotAssociative { i, j, k });
                    }
                }
            }
        }
        for x in 0..n {
            if !(0..n).any(|y| raw[x][y] == identity && raw[y][x] == identity) {
                return Err(GroupError::NoInverse { x });
            }
        }
        let mut labels = match labels {
            Some(l) if l.len() != n => {
                return Err(GroupError::LabelCount { expected: n, found: l.len() })
            }
            Some(l) => l,
            None => (0..n).map(|i| i.to_string()).collect(),
        };

        // Swap identity into slot 0.
        let relabel = |x: usize| match x {
            x if x == identity => 0,
            0 => identity,
            x => x,
        };
        let mut table = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                table[relabel(i) * n + relabel(j)] = relabel(raw[i][j]);
            }
        }
        labels.swap(0, identity);
        Ok(Self { order: n, table, labels, name: name.into() })
    }

    /// Builds from constructor output (identity already at 0). The table is
    /// validated like any other input.
    pub(crate) fn from_rows(rows: Vec<Vec<usize>>, labels: Vec<String>, name: String) -> Self {
        debug_assert!(rows.first().is_some_and(|r| r.iter().copied().eq(0..rows.len())));
        Self::validate(&rows, Some(labels), name).expect("constructor produced an invalid group")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn row(&self, a: usize) -> &[usize] {
        &self.table[a * self.order..(a + 1) * self.order]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|a| self.row(a).to_vec()).collect()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn check_element(&self, x: usize) -> Result<()> {
        if x < self.order {
            Ok(())
        } else {
            Err(GroupError::ElementOutOfRange { x, order: self.order })
        }
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.row(x).iter().position(|&p| p == 0).expect("validated group has inverses")
    }

    pub fn pow(&self, x: usize, mut k: usize) -> usize {
        let mut base = x;
        let mut acc = 0;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Order of `x`: the least `t >= 1` with `x^t = e`.
    pub fn element_order(&self, x: usize) -> usize {
        let mut t = 1;
        let mut acc = x;
        while acc != 0 {
            acc = self.mul(acc, x);
            t += 1;
        }
        t
    }

    /// The cyclic subgroup generated by `x`, as a sorted element list.
    pub fn cyclic_subgroup(&self, x: usize) -> Vec<usize> {
        let mut members = vec![0];
        let mut acc = x;
        while acc != 0 {
            members.push(acc);
            acc = self.mul(acc, x);
        }
        members.sort_unstable();
        members
    }

    pub fn is_cyclic(&self) -> bool {
        self.elements().any(|x| self.element_order(x) == self.order)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// True when every non-identity element has order 2.
    pub fn is_elementary_abelian_2(&self) -> bool {
        self.order > 1 && self.elements().skip(1).all(|x| self.element_order(x) == 2)
    }

    /// True when the order is a power of two (the trivial group counts).
    pub fn is_2_group(&self) -> bool {
        self.order.is_power_of_two()
    }

    pub fn maximal_cyclic_subgroups(&self) -> MaximalCyclicFamily {
        MaximalCyclicFamily::compute(self)
    }

    /// Elements that generate some maximal cyclic subgroup.
    pub fn generator_set(&self) -> Vec<usize> {
        self.maximal_cyclic_subgroups().generator_set()
    }

    /// Union of all maximal cyclic subgroups containing `x`.
    pub fn maximal_cyclic_union(&self, x: usize) -> Result<Vec<usize>> {
        self.check_element(x)?;
        Ok(self.maximal_cyclic_subgroups().union_containing(x))
    }
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

impl fmt::Display for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.name, self.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z3_rotated() -> Vec<Vec<usize>> {
        // Z_3 with identity stored as element 2: element k is (k + 1) mod 3.
        let idx = |v: usize| (v + 2) % 3;
        (0..3)
            .map(|i| (0..3).map(|j| idx(((i + 1) % 3 + (j + 1) % 3) % 3)).collect())
            .collect()
    }

    #[test]
    fn trivial_table_is_accepted() {
        let g = GroupTable::validate(&[vec![0]], None, "Z1").unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.element_order(0), 1);
    }

    #[test]
    fn identity_is_relocated_to_zero() {
        let raw = z3_rotated();
        assert_eq!(raw[2], vec![0, 1, 2]);
        let labels = vec!["a".to_string(), "b".into(), "e".into()];
        let g = GroupTable::validate(&raw, Some(labels), "Z3").unwrap();
        assert_eq!(g.label(0), "e");
        assert_eq!(g.row(0), &[0, 1, 2]);
        assert!(g.is_cyclic());
        assert!(g.elements().skip(1).all(|x| g.element_order(x) == 3));
    }

    #[test]
    fn forced_failures_name_the_offender() {
        let err = GroupTable::validate(&[vec![0, 1], vec![1, 1]], None, "bad").unwrap_err();
        assert_eq!(err, GroupError::RowNotPermutation { row: 1, first_col: 0, col: 1, value: 1 });

        let err = GroupTable::validate(&[vec![0, 1], vec![1]], None, "bad").unwrap_err();
        assert!(matches!(err, GroupError::NotSquare { row: 1, len: 1, expected: 2 }));

        let err = GroupTable::validate(&[vec![0, 2], vec![1, 0]], None, "bad").unwrap_err();
        assert!(matches!(err, GroupError::OutOfRange { row: 0, col: 1, value: 2, .. }));

        // x*y = -x-y mod 3: a Latin square with no identity.
        let raw = [vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]];
        let err = GroupTable::validate(&raw, None, "bad").unwrap_err();
        assert_eq!(err, GroupError::NoIdentity);
    }

    #[test]
    fn non_associative_loop_is_rejected() {
        // A Latin square with identity 0 that is not a group (order-5 loop).
        let raw = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = GroupTable::validate(&raw, None, "loop").unwrap_err();
        assert!(matches!(err, GroupError::NotAssociative { .. }), "{err:?}");
    }

    #[test]
    fn label_count_must_match() {
        let err = GroupTable::validate(&[vec![0]], Some(vec![]), "Z1").unwrap_err();
        assert_eq!(err, GroupError::LabelCount { expected: 1, found: 0 });
    }

    #[test]
    fn powers_and_inverses() {
        let g = make_cyclic(8).unwrap();
        assert_eq!(g.pow(3, 3), 1);
        assert_eq!(g.inverse(3), 5);
        assert_eq!(g.element_order(1), 8);
        assert_eq!(g.element_order(4), 2);
        assert_eq!(g.cyclic_subgroup(2), vec![0, 2, 4, 6]);
    }
}
