//! Compact group selectors such as `Q8`, `D:12`, `Zn:7` or `Z2xZ6`.
//!
//! Dihedral and dicyclic selectors use the group order (`D8` is the
//! symmetry group of the square, `Q12` the dicyclic group of order 12).
//! Products are written with `x` between factors.

use super::{
    direct_product, make_alternating, make_cyclic, make_dicyclic, make_dihedral, make_symmetric,
    GroupError, GroupTable, Result,
};

fn factor(token: &str) -> Result<GroupTable> {
    let unknown = || GroupError::UnknownSelector(token.to_string());
    let (family, digits) = if let Some(rest) = token.strip_prefix("Zn:") {
        ("Z", rest)
    } else {
        let split = token.find(|c: char| c.is_ascii_digit() || c == ':').ok_or_else(unknown)?;
        let (family, rest) = token.split_at(split);
        (family, rest.strip_prefix(':').unwrap_or(rest))
    };
    let value: usize = digits.parse().map_err(|_| unknown())?;
    let bad = |reason: String| GroupError::InvalidParameter { family: "selector", reason };
    match family {
        "Z" | "C" => make_cyclic(value),
        "D" => {
            if value % 2 != 0 || value < 4 {
                return Err(bad(format!("dihedral order must be even and >= 4, got {value}")));
            }
            make_dihedral(value / 2)
        }
        "Q" => {
            if value % 4 != 0 || value < 8 {
                return Err(bad(format!("dicyclic order must be a multiple of 4, >= 8, got {value}")));
            }
            make_dicyclic(value / 4)
        }
        "S" => make_symmetric(value),
        "A" => make_alternating(value),
        _ => Err(unknown()),
    }
}

/// Builds the group named by `selector`.
pub fn parse_selector(selector: &str) -> Result<GroupTable> {
    let cleaned: String = selector.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned.is_empty() {
        return Err(GroupError::UnknownSelector(selector.to_string()));
    }
    let mut factors = cleaned.split(['x', '×']).map(factor);
    let first = factors.next().expect("split yields at least one item")?;
    factors.try_fold(first, |acc, f| Ok(direct_product(&acc, &f?)))
}
