//! Named catalog of small groups.
//!
//! Up to order 15 the catalog is complete: it lists one representative of
//! every isomorphism class (28 groups). Orders 16 through 32 are covered by a
//! curated, non-exhaustive set of dihedral, dicyclic, abelian and a few other
//! families.

use super::{
    are_isomorphic, direct_product, make_alternating, make_cyclic, make_dicyclic, make_dihedral,
    make_symmetric, GroupError, GroupTable, Result,
};

/// Orders up to this bound are covered exhaustively.
pub const EXHAUSTIVE_CATALOG_LIMIT: usize = 15;
/// Largest order the curated extension reaches.
pub const CURATED_EXTENSION_LIMIT: usize = 32;

fn z(n: usize) -> GroupTable {
    make_cyclic(n).expect("n >= 1")
}

fn product(factors: &[GroupTable]) -> GroupTable {
    let mut it = factors.iter();
    let first = it.next().expect("at least one factor").clone();
    it.fold(first, |acc, f| direct_product(&acc, f))
}

fn zs(orders: &[usize]) -> GroupTable {
    product(&orders.iter().map(|&n| z(n)).collect::<Vec<_>>())
}

/// The non-cyclic groups of order at most 15, one per isomorphism class.
fn exhaustive_noncyclic() -> Vec<GroupTable> {
    vec![
        zs(&[2, 2]),
        make_symmetric(3).unwrap(),
        zs(&[2, 4]),
        zs(&[2, 2, 2]),
        make_dihedral(4).unwrap(),
        make_dicyclic(2).unwrap(),
        zs(&[3, 3]),
        make_dihedral(5).unwrap(),
        zs(&[2, 6]),
        make_alternating(4).unwrap(),
        make_dihedral(6).unwrap(),
        make_dicyclic(3).unwrap(),
        make_dihedral(7).unwrap(),
    ]
}

fn curated_noncyclic() -> Vec<GroupTable> {
    let mut out = Vec::new();
    out.extend((8..=16).map(|n| make_dihedral(n).unwrap()));
    out.extend((4..=8).map(|n| make_dicyclic(n).unwrap()));
    for orders in [
        &[2, 8][..],
        &[4, 4],
        &[2, 2, 4],
        &[2, 2, 2, 2],
        &[3, 6],
        &[2, 10],
        &[2, 12],
        &[2, 2, 6],
        &[5, 5],
        &[3, 9],
        &[3, 3, 3],
        &[2, 14],
        &[2, 16],
        &[4, 8],
        &[2, 2, 8],
        &[2, 4, 4],
        &[2, 2, 2, 4],
        &[2, 2, 2, 2, 2],
    ] {
        out.push(zs(orders));
    }
    out.push(direct_product(&z(2), &make_dihedral(4).unwrap()));
    out.push(direct_product(&z(2), &make_dicyclic(2).unwrap()));
    out.push(direct_product(&z(3), &make_symmetric(3).unwrap()));
    out.push(direct_product(&z(2), &make_alternating(4).unwrap()));
    out.push(make_symmetric(4).unwrap());
    out
}

/// All catalog groups of order at most `max_order`, sorted by order.
///
/// Cyclic groups come first within each order; the remaining entries keep
/// their listing order. Orders above [`EXHAUSTIVE_CATALOG_LIMIT`] are not
/// exhaustive (see [`is_curated_extension`]).
pub fn catalog(max_order: usize) -> Result<Vec<GroupTable>> {
    if !(1..=CURATED_EXTENSION_LIMIT).contains(&max_order) {
        return Err(GroupError::InvalidParameter {
            family: "catalog",
            reason: format!("max_order must be in 1..={CURATED_EXTENSION_LIMIT}, got {max_order}"),
        });
    }
    let mut noncyclic = exhaustive_noncyclic();
    if max_order > EXHAUSTIVE_CATALOG_LIMIT {
        for g in curated_noncyclic() {
            if g.order() > max_order {
                continue;
            }
            let duplicate = noncyclic.iter().any(|h| are_isomorphic(h, &g));
            debug_assert!(!duplicate, "{} duplicates a catalog entry", g.name());
            if !duplicate {
                noncyclic.push(g);
            }
        }
    }
    let mut out = Vec::new();
    for order in 1..=max_order {
        out.push(z(order));
        out.extend(noncyclic.iter().filter(|g| g.order() == order).cloned());
    }
    Ok(out)
}

/// True for orders where the catalog is a curated sample rather than complete.
pub fn is_curated_extension(order: usize) -> bool {
    order > EXHAUSTIVE_CATALOG_LIMIT
}
