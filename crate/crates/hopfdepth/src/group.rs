//! Finite groups as multiplication tables.
//!
//! Every group is carried as a full Cayley table over indexed, named
//! elements; all orders in scope are small enough that exhaustive search is
//! the right tool for conjugacy, centers and validation.

use crate::error::HopfError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    pub name: String,
    names: Vec<String>,
    /// table[i][j] = index of g_i * g_j
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

/// Conjugacy classes as a partition of element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyData {
    pub classes: Vec<Vec<usize>>,
    pub centralizer_orders: Vec<usize>,
}

impl FiniteGroup {
    /// Validates and wraps an explicit table. The identity must sit at
    /// index 0.
    pub fn from_table(
        name: impl Into<String>,
        names: Vec<String>,
        table: Vec<Vec<usize>>,
    ) -> Result<Self, HopfError> {
        let n = table.len();
        if n == 0 {
            return Err(HopfError::InvalidGroup { reason: "empty table".into() });
        }
        if names.len() != n {
            return Err(HopfError::InvalidGroup {
                reason: format!("{} names for {} elements", names.len(), n),
            });
        }
        {
            let mut sorted = names.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != n {
                return Err(HopfError::InvalidGroup { reason: "duplicate element names".into() });
            }
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(HopfError::InvalidGroup { reason: format!("row {i} is ragged") });
            }
            if row.iter().any(|&x| x >= n) {
                return Err(HopfError::InvalidGroup {
                    reason: format!("row {i} has an out-of-range index"),
                });
            }
        }
        // Latin square
        for i in 0..n {
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for j in 0..n {
                if seen_row[table[i][j]] {
                    return Err(HopfError::InvalidGroup {
                        reason: format!("row {i} repeats element {}", table[i][j]),
                    });
                }
                seen_row[table[i][j]] = true;
                if seen_col[table[j][i]] {
                    return Err(HopfError::InvalidGroup {
                        reason: format!("column {i} repeats element {}", table[j][i]),
                    });
                }
                seen_col[table[j][i]] = true;
            }
        }
        // identity at 0
        for j in 0..n {
            if table[0][j] != j || table[j][0] != j {
                return Err(HopfError::InvalidGroup {
                    reason: "element 0 is not a two-sided identity".into(),
                });
            }
        }
        // associativity, exhaustively
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(HopfError::InvalidGroup {
                            reason: format!("associativity fails at ({a}, {b}, {c})"),
                        });
                    }
                }
            }
        }
        // two-sided inverses
        let mut inverse = vec![usize::MAX; n];
        for a in 0..n {
            match (0..n).find(|&b| table[a][b] == 0 && table[b][a] == 0) {
                Some(b) => inverse[a] = b,
                None => {
                    return Err(HopfError::InvalidGroup {
                        reason: format!("element {a} has no two-sided inverse"),
                    })
                }
            }
        }
        Ok(FiniteGroup { name: name.into(), names, table, inverse })
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn element_name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// g x g^{-1}
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Indices of central elements.
    pub fn center(&self) -> Vec<usize> {
        let n = self.order();
        (0..n).filter(|&z| (0..n).all(|g| self.mul(z, g) == self.mul(g, z))).collect()
    }

    pub fn centralizer(&self, x: usize) -> Vec<usize> {
        (0..self.order()).filter(|&g| self.mul(g, x) == self.mul(x, g)).collect()
    }

    pub fn conjugacy_classes(&self) -> ConjugacyData {
        let n = self.order();
        let mut assigned = vec![false; n];
        let mut classes = Vec::new();
        let mut centralizer_orders = Vec::new();
        for x in 0..n {
            if assigned[x] {
                continue;
            }
            let mut class: Vec<usize> = (0..n).map(|g| self.conjugate(g, x)).collect();
            class.sort_unstable();
            class.dedup();
            for &y in &class {
                assigned[y] = true;
            }
            centralizer_orders.push(self.centralizer(x).len());
            classes.push(class);
        }
        ConjugacyData { classes, centralizer_orders }
    }

    /// Class index of each element, aligned with `conjugacy_classes`.
    pub fn class_of(&self) -> Vec<usize> {
        let data = self.conjugacy_classes();
        let mut out = vec![0usize; self.order()];
        for (k, class) in data.classes.iter().enumerate() {
            for &x in class {
                out[x] = k;
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// builders
// ---------------------------------------------------------------------------

pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let names = (0..n)
        .map(|k| if k == 0 { "e".to_string() } else { format!("g{k}") })
        .collect();
    let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    FiniteGroup::from_table(format!("C{n}"), names, table).expect("cyclic table is a group")
}

/// Dihedral group of the n-gon, order 2n. Elements r^i and s r^i with
/// s r s = r^{-1}.
pub fn dihedral(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let order = 2 * n;
    let name_of = |k: usize| -> String {
        if k < n {
            match k {
                0 => "e".to_string(),
                1 => "r".to_string(),
                _ => format!("r{k}"),
            }
        } else if k == n {
            "s".to_string()
        } else {
            format!("sr{}", k - n)
        }
    };
    // element k < n is r^k; element n + k is s r^k
    let mul = |a: usize, b: usize| -> usize {
        let (fa, ia) = (a >= n, a % n);
        let (fb, ib) = (b >= n, b % n);
        match (fa, fb) {
            (false, false) => (ia + ib) % n,
            (false, true) => n + (ib + n - ia) % n, // r^i s r^j = s r^{j-i}
            (true, false) => n + (ia + ib) % n,
            (true, true) => (ib + n - ia) % n, // s r^i s r^j = r^{j-i}
        }
    };
    let names = (0..order).map(name_of).collect();
    let table = (0..order).map(|a| (0..order).map(|b| mul(a, b)).collect()).collect();
    FiniteGroup::from_table(format!("D{n}"), names, table).expect("dihedral table is a group")
}

/// Symmetric group on n letters, n <= 4, with cycle-notation names.
pub fn symmetric(n: usize) -> FiniteGroup {
    assert!((1..=4).contains(&n), "symmetric groups are provided for n <= 4");
    let perms = all_permutations(n);
    let names: Vec<String> = perms.iter().map(|p| cycle_notation(p)).collect();
    let index_of = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
    let table = perms
        .iter()
        .map(|a| {
            perms
                .iter()
                .map(|b| {
                    // (a ∘ b)(x) = a(b(x))
                    let comp: Vec<usize> = (0..n).map(|x| a[b[x]]).collect();
                    index_of(&comp)
                })
                .collect()
        })
        .collect();
    FiniteGroup::from_table(format!("S{n}"), names, table).expect("symmetric table is a group")
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    // lexicographic order puts the identity first
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(current.clone());
        // next permutation in lex order
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
    }
    out
}

fn cycle_notation(p: &[usize]) -> String {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || p[start] == start {
            seen[start] = true;
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cycle.push(x);
            x = p[x];
        }
        out.push('(');
        for c in cycle {
            out.push_str(&(c + 1).to_string());
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push('e');
    }
    out
}

/// Quaternion group {±1, ±i, ±j, ±k}.
pub fn quaternion() -> FiniteGroup {
    let names: Vec<String> =
        ["1", "-1", "i", "-i", "j", "-j", "k", "-k"].iter().map(|s| s.to_string()).collect();
    // encode q = (sign, axis) with axis in {1, i, j, k}
    let dec = |a: usize| -> (bool, usize) { (a % 2 == 1, a / 2) };
    let enc = |neg: bool, axis: usize| -> usize { 2 * axis + usize::from(neg) };
    let mul = |a: usize, b: usize| -> usize {
        let (na, xa) = dec(a);
        let (nb, xb) = dec(b);
        // axis multiplication table with sign, axes: 0=1, 1=i, 2=j, 3=k
        let (neg, axis) = match (xa, xb) {
            (0, x) => (false, x),
            (x, 0) => (false, x),
            (1, 1) | (2, 2) | (3, 3) => (true, 0),
            (1, 2) => (false, 3),
            (2, 1) => (true, 3),
            (2, 3) => (false, 1),
            (3, 2) => (true, 1),
            (3, 1) => (false, 2),
            (1, 3) => (true, 2),
            _ => unreachable!(),
        };
        enc(neg ^ na ^ nb, axis)
    };
    let table = (0..8).map(|a| (0..8).map(|b| mul(a, b)).collect()).collect();
    FiniteGroup::from_table("Q8", names, table).expect("quaternion table is a group")
}

pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let (n, m) = (g.order(), h.order());
    let names = (0..n * m)
        .map(|k| format!("{}|{}", g.element_name(k / m), h.element_name(k % m)))
        .collect();
    let table = (0..n * m)
        .map(|a| {
            (0..n * m)
                .map(|b| g.mul(a / m, b / m) * m + h.mul(a % m, b % m))
                .collect()
        })
        .collect();
    FiniteGroup::from_table(format!("{}x{}", g.name, h.name), names, table)
        .expect("product table is a group")
}

/// Parses builtin names: `C6`, `S3`, `D4`, `Q8` and products like `C2xC2`.
pub fn builtin_group(spec: &str) -> Result<FiniteGroup, HopfError> {
    let spec = spec.trim();
    if let Some((left, right)) = spec.split_once('x') {
        let g = builtin_group(left)?;
        let h = builtin_group(right)?;
        return Ok(direct_product(&g, &h));
    }
    let unknown = || HopfError::UnknownBuiltin { spec: spec.to_string() };
    if spec == "Q8" {
        return Ok(quaternion());
    }
    let (kind, num) = spec.split_at(1);
    let n: usize = num.parse().map_err(|_| unknown())?;
    match kind {
        "C" if n >= 1 => Ok(cyclic(n)),
        "D" if n >= 1 => Ok(dihedral(n)),
        "S" if (1..=4).contains(&n) => Ok(symmetric(n)),
        _ => Err(unknown()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_two() {
        let g = cyclic(2);
        assert_eq!(g.order(), 2);
        assert!(g.is_abelian());
        assert_eq!(g.inv(1), 1);
    }

    #[test]
    fn s3_classes() {
        let g = symmetric(3);
        assert_eq!(g.order(), 6);
        let mut sizes: Vec<usize> =
            g.conjugacy_classes().classes.iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert!(!g.is_abelian());
        assert_eq!(g.center(), vec![0]);
    }

    #[test]
    fn s3_conjugation_matches_hand_computation() {
        let g = symmetric(3);
        let a = g.index_of("(123)").unwrap();
        let b = g.index_of("(13)").unwrap();
        let c = g.index_of("(12)").unwrap();
        assert_eq!(g.conjugate(a, b), c);
    }

    #[test]
    fn conjugation_by_identity_fixes_everything() {
        for g in [symmetric(4), quaternion(), dihedral(4)] {
            for x in 0..g.order() {
                assert_eq!(g.conjugate(g.identity(), x), x);
            }
        }
    }

    #[test]
    fn abelian_conjugation_is_trivial() {
        let g = direct_product(&cyclic(2), &cyclic(2));
        assert!(g.is_abelian());
        for a in 0..4 {
            for x in 0..4 {
                assert_eq!(g.conjugate(a, x), x);
            }
        }
        assert_eq!(g.center().len(), 4);
    }

    #[test]
    fn quaternion_center() {
        let g = quaternion();
        assert!(!g.is_abelian());
        assert_eq!(g.center().len(), 2);
        let data = g.conjugacy_classes();
        for (class, cz) in data.classes.iter().zip(&data.centralizer_orders) {
            assert_eq!(class.len() * cz, g.order());
        }
    }

    #[test]
    fn classes_are_conjugation_invariant() {
        let g = dihedral(4);
        let class_of = g.class_of();
        for a in 0..g.order() {
            for x in 0..g.order() {
                assert_eq!(class_of[g.conjugate(a, x)], class_of[x]);
            }
        }
    }

    #[test]
    fn invalid_tables_rejected() {
        // not a Latin square (column 1 repeats)
        let table = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 1, 0]];
        let names: Vec<String> = vec!["e".into(), "a".into(), "b".into()];
        let err = FiniteGroup::from_table("bad", names, table).unwrap_err();
        assert!(matches!(err, HopfError::InvalidGroup { .. }));

        // a Latin square with identity that fails associativity: (1*1)*2 != 1*(1*2)
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let names: Vec<String> = (0..5).map(|k| format!("x{k}")).collect();
        let err = FiniteGroup::from_table("loop5", names, loop5).unwrap_err();
        match err {
            HopfError::InvalidGroup { reason } => assert!(reason.contains("associativity")),
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn builtin_parsing() {
        assert_eq!(builtin_group("C4").unwrap().order(), 4);
        assert_eq!(builtin_group("C2xC2").unwrap().order(), 4);
        assert_eq!(builtin_group("D4").unwrap().order(), 8);
        assert_eq!(builtin_group("S4").unwrap().order(), 24);
        assert!(builtin_group("S5").is_err());
        assert!(builtin_group("X3").is_err());
    }
}
