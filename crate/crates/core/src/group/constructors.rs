//! Standard group families, each realized directly on a canonical ordering.

use super::{GroupError, GroupTable, Result};

fn invalid(family: &'static str, reason: impl Into<String>) -> GroupError {
    GroupError::InvalidParameter { family, reason: reason.into() }
}

/// The cyclic group `Z_n` with `table[i][j] = (i + j) mod n`.
pub fn make_cyclic(n: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(invalid("Z", "n must be at least 1"));
    }
    let rows = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    let labels = (0..n).map(|i| i.to_string()).collect();
    Ok(GroupTable::from_rows(rows, labels, format!("Z{n}")))
}

fn power_label(base: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => base.to_string(),
        k => format!("{base}^{k}"),
    }
}

fn word_label(base: &str, k: usize, tail: &str) -> String {
    let head = power_label(base, k);
    match (head.is_empty(), tail.is_empty()) {
        (true, true) => "e".into(),
        (true, false) => tail.into(),
        (false, true) => head,
        (false, false) => format!("{head}{tail}"),
    }
}

/// The dihedral group `D_2n = <x, y | x^n = y^2 = e, xy = yx^-1>` of order `2n`.
///
/// Elements are ordered `e, x, ..., x^(n-1), y, xy, ..., x^(n-1)y`. `n = 2` is
/// accepted and yields the Klein four-group `Z2 x Z2` under the name `D4`.
pub fn make_dihedral(n: usize) -> Result<GroupTable> {
    if n < 2 {
        return Err(invalid("D", format!("n must be at least 2, got {n}")));
    }
    let order = 2 * n;
    // x^a y^s with s in {0, 1} lives at index a + s*n.
    let rows = (0..order)
        .map(|p| {
            let (a, s) = (p % n, p / n);
            (0..order)
                .map(|q| {
                    let (b, t) = (q % n, q / n);
                    // y x^b = x^-b y
                    let rot = if s == 0 { (a + b) % n } else { (a + n - b) % n };
                    rot + ((s + t) % 2) * n
                })
                .collect()
        })
        .collect();
    let labels = (0..order).map(|p| word_label("x", p % n, if p >= n { "y" } else { "" })).collect();
    Ok(GroupTable::from_rows(rows, labels, format!("D{order}")))
}

/// The dicyclic group `Q_4n = <a, b | a^2n = e, a^n = b^2, ab = ba^-1>` of order `4n`.
///
/// Elements are ordered `e, a, ..., a^(2n-1), b, ab, ..., a^(2n-1)b`.
pub fn make_dicyclic(n: usize) -> Result<GroupTable> {
    if n < 2 {
        return Err(invalid("Q", format!("n must be at least 2, got {n}")));
    }
    let m = 2 * n;
    let order = 2 * m;
    let rows = (0..order)
        .map(|p| {
            let (i, s) = (p % m, p / m);
            (0..order)
                .map(|q| {
                    let (j, t) = (q % m, q / m);
                    match (s, t) {
                        (0, 0) => (i + j) % m,
                        (0, _) => (i + j) % m + m,
                        // b a^j = a^-j b
                        (_, 0) => (i + m - j) % m + m,
                        // a^i b a^j b = a^(i-j) b^2 = a^(i-j+n)
                        _ => (i + m - j + n) % m,
                    }
                })
                .collect()
        })
        .collect();
    let labels = (0..order).map(|p| word_label("a", p % m, if p >= m { "b" } else { "" })).collect();
    Ok(GroupTable::from_rows(rows, labels, format!("Q{order}")))
}

/// Largest degree accepted by the permutation-group constructors.
pub const MAX_PERMUTATION_DEGREE: usize = 5;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    // Lexicographic order, identity first.
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else { break };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
    out
}

fn is_even(p: &[usize]) -> bool {
    let inversions: usize =
        (0..p.len()).map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count()).sum();
    inversions % 2 == 0
}

fn permutation_group(perms: Vec<Vec<usize>>, name: String) -> GroupTable {
    let index: std::collections::HashMap<&[usize], usize> =
        perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    // (p * q)(k) = p(q(k))
    let rows = perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| {
                    let composed: Vec<usize> = q.iter().map(|&k| p[k]).collect();
                    index[composed.as_slice()]
                })
                .collect()
        })
        .collect();
    let labels = perms.iter().map(|p| cycle_notation(p)).collect();
    GroupTable::from_rows(rows, labels, name)
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            out.push_str(&(k + 1).to_string());
            k = p[k];
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push('e');
    }
    out
}

fn check_degree(family: &'static str, n: usize) -> Result<()> {
    if (1..=MAX_PERMUTATION_DEGREE).contains(&n) {
        Ok(())
    } else {
        Err(invalid(family, format!("degree must be in 1..={MAX_PERMUTATION_DEGREE}, got {n}")))
    }
}

/// The symmetric group `S_n` on lexicographically ordered permutations.
pub fn make_symmetric(n: usize) -> Result<GroupTable> {
    check_degree("S", n)?;
    Ok(permutation_group(permutations(n), format!("S{n}")))
}

/// The alternating group `A_n`: even permutations in lexicographic order.
pub fn make_alternating(n: usize) -> Result<GroupTable> {
    check_degree("A", n)?;
    let perms = permutations(n).into_iter().filter(|p| is_even(p)).collect();
    Ok(permutation_group(perms, format!("A{n}")))
}

/// Componentwise product. The pair `(a, b)` lives at index `a * |h| + b`.
pub fn direct_product(g: &GroupTable, h: &GroupTable) -> GroupTable {
    let (n, m) = (g.order(), h.order());
    let rows = (0..n * m)
        .map(|p| {
            let (a, b) = (p / m, p % m);
            (0..n * m)
                .map(|q| {
                    let (c, d) = (q / m, q % m);
                    g.mul(a, c) * m + h.mul(b, d)
                })
                .collect()
        })
        .collect();
    let labels = (0..n * m).map(|p| format!("({},{})", g.label(p / m), h.label(p % m))).collect();
    GroupTable::from_rows(rows, labels, format!("{}x{}", g.name(), h.name()))
}
