//! Closed forms for the genus and crosscap number of complete and complete
//! bipartite graphs.

use super::{Result, TopologyError};

fn ceil_div(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

fn range(what: &str, ok: bool) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(TopologyError::OutOfRange(what.to_string()))
    }
}

/// Genus of `K_n`, `n >= 3`.
pub fn formula_genus_kn(n: u64) -> Result<u64> {
    range("K_n genus needs n >= 3", n >= 3)?;
    Ok(ceil_div((n - 3) * n.saturating_sub(4), 12))
}

/// Genus of `K_{m,n}`, `m, n >= 2`.
pub fn formula_genus_kmn(m: u64, n: u64) -> Result<u64> {
    range("K_{m,n} genus needs m, n >= 2", m >= 2 && n >= 2)?;
    Ok(ceil_div((m - 2) * (n - 2), 4))
}

/// Crosscap number of `K_n`, `n >= 3`; `K_7` is the one exception to the
/// general expression.
pub fn formula_crosscap_kn(n: u64) -> Result<u64> {
    range("K_n crosscap needs n >= 3", n >= 3)?;
    if n == 7 {
        return Ok(3);
    }
    Ok(ceil_div((n - 3) * n.saturating_sub(4), 6))
}

/// Crosscap number of `K_{m,n}`, `m, n >= 2`.
pub fn formula_crosscap_kmn(m: u64, n: u64) -> Result<u64> {
    range("K_{m,n} crosscap needs m, n >= 2", m >= 2 && n >= 2)?;
    Ok(ceil_div((m - 2) * (n - 2), 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        assert_eq!(formula_genus_kn(3).unwrap(), 0);
        assert_eq!(formula_genus_kn(4).unwrap(), 0);
        assert_eq!(formula_genus_kn(5).unwrap(), 1);
        assert_eq!(formula_genus_kn(7).unwrap(), 1);
        assert_eq!(formula_genus_kn(8).unwrap(), 2);
        assert_eq!(formula_crosscap_kn(5).unwrap(), 1);
        assert_eq!(formula_crosscap_kn(6).unwrap(), 1);
        assert_eq!(formula_crosscap_kn(7).unwrap(), 3);
        assert_eq!(formula_crosscap_kn(8).unwrap(), 4);
        assert_eq!(formula_genus_kmn(3, 3).unwrap(), 1);
        assert_eq!(formula_genus_kmn(4, 4).unwrap(), 1);
        assert_eq!(formula_genus_kmn(4, 5).unwrap(), 2);
        assert_eq!(formula_crosscap_kmn(4, 5).unwrap(), 3);
        assert_eq!(formula_genus_kmn(5, 6).unwrap(), 3);
        assert_eq!(formula_crosscap_kmn(5, 6).unwrap(), 6);
        assert_eq!(formula_genus_kmn(2, 9).unwrap(), 0);
    }

    #[test]
    fn ranges() {
        assert!(formula_genus_kn(2).is_err());
        assert!(formula_crosscap_kn(0).is_err());
        assert!(formula_genus_kmn(1, 5).is_err());
        assert!(formula_crosscap_kmn(5, 1).is_err());
    }
}
