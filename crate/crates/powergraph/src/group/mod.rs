//! Finite groups as full multiplication tables.
//!
//! Every group in this crate is a Cayley table over elements `0..n`, with the
//! identity fixed at index 0. This is the universal representation: all
//! constructions, presentations and file formats funnel into [`Group`].

mod iso;
mod series;

pub mod cayley;

pub use iso::are_isomorphic_groups;

/// Prime factorization of `n` as `(prime, exponent)` pairs in ascending order.
pub fn factorize_order(n: usize) -> Vec<(usize, usize)> {
    series::factorize(n)
}

use serde::Serialize;
use thiserror::Error;

use crate::order_cap;

/// Full-table validation is O(n^3); above this order only a generating set is
/// checked and the group is marked lightly validated.
pub const FULL_VALIDATION_LIMIT: usize = 512;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("not a Latin square: {axis} {index} repeats element {element}")]
    NotLatinSquare {
        axis: &'static str,
        index: usize,
        element: usize,
    },
    #[error("table entry [{row}][{col}] = {entry} out of range 0..{n}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        entry: usize,
        n: usize,
    },
    #[error("index 0 is not an identity: 0*{index} or {index}*0 differs from {index}")]
    IdentityNotZero { index: usize },
    #[error("not associative at triple ({i}, {j}, {k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: usize },
    #[error("product order {required} exceeds cap {cap}")]
    ProductTooLarge { required: usize, cap: usize },
    #[error("{m} is not a Hall divisor of {n}: gcd(m, n/m) must be 1")]
    NotHallDivisor { m: usize, n: usize },
    #[error("cayley parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A finite group given by its full multiplication table.
///
/// Invariants (established by [`Group::validate`]):
/// * the table is a Latin square;
/// * index 0 is a two-sided identity;
/// * multiplication is associative;
/// * every element has a two-sided inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    n: usize,
    table: Vec<u32>,
    orders: Vec<u32>,
    inverses: Vec<u32>,
    label: Option<String>,
    lightly_validated: bool,
}

impl Group {
    /// Validate a multiplication table and wrap it as a [`Group`].
    ///
    /// For orders above [`FULL_VALIDATION_LIMIT`] associativity is checked via
    /// Light's test on a generating set instead of all n^3 triples.
    pub fn validate(table: Vec<Vec<u32>>) -> Result<Group, GroupError> {
        let n = table.len();
        assert!(n > 0, "empty table");
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::Parse {
                    line: i,
                    message: format!("row {i} has {} entries, expected {n}", row.len()),
                });
            }
            for (j, &e) in row.iter().enumerate() {
                if e as usize >= n {
                    return Err(GroupError::EntryOutOfRange {
                        row: i,
                        col: j,
                        entry: e as usize,
                        n,
                    });
                }
            }
            flat.extend_from_slice(row);
        }
        Self::validate_flat(n, flat)
    }

    pub fn validate_flat(n: usize, table: Vec<u32>) -> Result<Group, GroupError> {
        assert_eq!(table.len(), n * n);
        // Latin square.
        let mut seen = vec![usize::MAX; n];
        for i in 0..n {
            for j in 0..n {
                let e = table[i * n + j] as usize;
                if seen[e] == i {
                    return Err(GroupError::NotLatinSquare {
                        axis: "row",
                        index: i,
                        element: e,
                    });
                }
                seen[e] = i;
            }
        }
        let mut seen = vec![usize::MAX; n];
        for j in 0..n {
            for i in 0..n {
                let e = table[i * n + j] as usize;
                if seen[e] == j {
                    return Err(GroupError::NotLatinSquare {
                        axis: "column",
                        index: j,
                        element: e,
                    });
                }
                seen[e] = j;
            }
        }
        // Identity at 0.
        for i in 0..n {
            if table[i] as usize != i || table[i * n] as usize != i {
                return Err(GroupError::IdentityNotZero { index: i });
            }
        }
        // Associativity.
        let mul = |a: usize, b: usize| table[a * n + b] as usize;
        let lightly_validated = n > FULL_VALIDATION_LIMIT;
        if !lightly_validated {
            for i in 0..n {
                for j in 0..n {
                    let ij = mul(i, j);
                    for k in 0..n {
                        if mul(ij, k) != mul(i, mul(j, k)) {
                            return Err(GroupError::NotAssociative { i, j, k });
                        }
                    }
                }
            }
        } else {
            // Light's test: associativity for all pairs against a generating set
            // implies associativity everywhere.
            let gens = greedy_generators_of_table(n, &table);
            for &g in &gens {
                let g = g as usize;
                for i in 0..n {
                    let ig = mul(i, g);
                    for j in 0..n {
                        if mul(ig, j) != mul(i, mul(g, j)) {
                            return Err(GroupError::NotAssociative { i, j: g, k: j });
                        }
                    }
                }
            }
        }
        // Two-sided inverses (implied, but checked directly).
        let mut inverses = vec![0u32; n];
        for i in 0..n {
            let mut found = false;
            for j in 0..n {
                if mul(i, j) == 0 && mul(j, i) == 0 {
                    inverses[i] = j as u32;
                    found = true;
                    break;
                }
            }
            if !found {
                return Err(GroupError::NoInverse { element: i });
            }
        }
        let orders = compute_orders(n, &table);
        Ok(Group {
            n,
            table,
            orders,
            inverses,
            label: None,
            lightly_validated,
        })
    }

    /// Build from a table known to be a valid group (constructor output).
    /// Debug builds re-validate.
    pub(crate) fn from_valid_flat(n: usize, table: Vec<u32>, label: impl Into<String>) -> Group {
        #[cfg(debug_assertions)]
        {
            let g = Self::validate_flat(n, table.clone()).expect("constructor produced bad table");
            return g.with_label(label);
        }
        #[cfg(not(debug_assertions))]
        {
            let inverses = compute_inverses(n, &table);
            let orders = compute_orders(n, &table);
            Group {
                n,
                table,
                orders,
                inverses,
                label: Some(label.into()),
                lightly_validated: n > FULL_VALIDATION_LIMIT,
            }
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Group {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// Group order.
    pub fn n(&self) -> usize {
        self.n
    }

    /// True when the order exceeded the full-validation limit and only a
    /// generating set was checked for associativity.
    pub fn is_lightly_validated(&self) -> bool {
        self.lightly_validated
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    /// Order of element `x`: the least `m >= 1` with `x^m = 0`.
    #[inline]
    pub fn element_order(&self, x: usize) -> usize {
        self.orders[x] as usize
    }

    /// `x^m` by square-and-multiply; `x^0` is the identity.
    pub fn power(&self, x: usize, m: usize) -> usize {
        let mut m = m % self.element_order(x).max(1);
        let mut base = x;
        let mut acc = 0;
        while m > 0 {
            if m & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            m >>= 1;
        }
        acc
    }

    /// The cyclic subgroup generated by `x`, in power order `x, x^2, ..., 0`.
    pub fn cyclic_subgroup(&self, x: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut cur = x;
        loop {
            out.push(cur);
            if cur == 0 {
                return out;
            }
            cur = self.mul(cur, x);
        }
    }

    pub fn order_spectrum(&self) -> OrderSpectrum {
        let mut counts = std::collections::BTreeMap::new();
        for x in 0..self.n {
            *counts.entry(self.orders[x]).or_insert(0u32) += 1;
        }
        OrderSpectrum {
            entries: counts.into_iter().collect(),
        }
    }

    pub fn is_abelian(&self) -> bool {
        for a in 0..self.n {
            for b in (a + 1)..self.n {
                if self.mul(a, b) != self.mul(b, a) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_cyclic(&self) -> bool {
        self.orders.iter().any(|&o| o as usize == self.n)
    }

    /// Greedy generating set: repeatedly add the smallest element outside the
    /// closure of the current generators.
    pub fn greedy_generators(&self) -> Vec<usize> {
        greedy_generators_of_table(self.n, &self.table)
            .into_iter()
            .map(|g| g as usize)
            .collect()
    }

    /// Direct product with componentwise multiplication; `(i, j)` is encoded
    /// as `i * |H| + j`, so the identity stays at 0.
    pub fn direct_product(&self, other: &Group) -> Result<Group, GroupError> {
        let n = self
            .n
            .checked_mul(other.n)
            .ok_or(GroupError::ProductTooLarge {
                required: usize::MAX,
                cap: order_cap(),
            })?;
        if n > order_cap() {
            return Err(GroupError::ProductTooLarge {
                required: n,
                cap: order_cap(),
            });
        }
        let m = other.n;
        let mut table = vec![0u32; n * n];
        for a1 in 0..self.n {
            for b1 in 0..m {
                let x = a1 * m + b1;
                for a2 in 0..self.n {
                    let a = self.mul(a1, a2);
                    for b2 in 0..m {
                        let y = a2 * m + b2;
                        table[x * n + y] = (a * m + other.mul(b1, b2)) as u32;
                    }
                }
            }
        }
        let label = format!(
            "({} x {})",
            self.label.as_deref().unwrap_or("?"),
            other.label.as_deref().unwrap_or("?")
        );
        Ok(Group::from_valid_flat(n, table, label))
    }
}

fn compute_orders(n: usize, table: &[u32]) -> Vec<u32> {
    let mut orders = vec![0u32; n];
    for x in 0..n {
        let mut cur = x;
        let mut m = 1u32;
        while cur != 0 {
            cur = table[cur * n + x] as usize;
            m += 1;
        }
        orders[x] = m;
    }
    orders[0] = 1;
    orders
}

#[allow(dead_code)]
fn compute_inverses(n: usize, table: &[u32]) -> Vec<u32> {
    let mut inv = vec![0u32; n];
    for i in 0..n {
        for j in 0..n {
            if table[i * n + j] == 0 {
                inv[i] = j as u32;
                break;
            }
        }
    }
    inv
}

fn greedy_generators_of_table(n: usize, table: &[u32]) -> Vec<u32> {
    let mut in_closure = vec![false; n];
    in_closure[0] = true;
    let mut closure = vec![0u32];
    let mut gens = Vec::new();
    loop {
        let Some(next) = in_closure.iter().position(|&b| !b) else {
            return gens;
        };
        gens.push(next as u32);
        // Extend the closure with the new generator.
        let mut queue = vec![next as u32];
        in_closure[next] = true;
        closure.push(next as u32);
        while let Some(a) = queue.pop() {
            let mut k = 0;
            while k < closure.len() {
                let b = closure[k];
                for p in [
                    table[a as usize * n + b as usize],
                    table[b as usize * n + a as usize],
                ] {
                    if !in_closure[p as usize] {
                        in_closure[p as usize] = true;
                        closure.push(p);
                        queue.push(p);
                    }
                }
                k += 1;
            }
        }
    }
}

/// Multiset of element orders, as sorted `(order, count)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderSpectrum {
    pub entries: Vec<(u32, u32)>,
}

impl OrderSpectrum {
    pub fn of(g: &Group) -> OrderSpectrum {
        g.order_spectrum()
    }

    pub fn count(&self, order: u32) -> u32 {
        self.entries
            .iter()
            .find(|&&(o, _)| o == order)
            .map_or(0, |&(_, c)| c)
    }

    pub fn total(&self) -> u32 {
        self.entries.iter().map(|&(_, c)| c).sum()
    }
}

impl std::fmt::Display for OrderSpectrum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, (o, c)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{o}:{c}")?;
        }
        write!(f, "}}")
    }
}

/// True iff `g` and `h` have the same number of elements of each order.
pub fn are_conformal(g: &Group, h: &Group) -> bool {
    g.order_spectrum() == h.order_spectrum()
}

/// A subgroup of some parent group, stored as a sorted member list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    pub members: Vec<u32>,
}

impl Subgroup {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&(x as u32)).is_ok()
    }

    pub fn is_whole(&self, g: &Group) -> bool {
        self.members.len() == g.n()
    }

    pub fn is_trivial(&self) -> bool {
        self.members == [0]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    fn c3_table() -> Vec<Vec<u32>> {
        vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]
    }

    #[test]
    fn trivial_group() {
        let g = Group::validate(vec![vec![0]]).unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.element_order(0), 1);
    }

    #[test]
    fn c3_is_valid() {
        let g = Group::validate(c3_table()).unwrap();
        assert_eq!(g.element_order(1), 3);
        assert_eq!(g.order_spectrum().entries, vec![(1, 1), (3, 2)]);
    }

    #[test]
    fn mutated_c3_rejected() {
        let mut t = c3_table();
        t[1] = vec![1, 0, 2];
        let err = Group::validate(t).unwrap_err();
        assert!(matches!(
            err,
            GroupError::NotAssociative { .. } | GroupError::NotLatinSquare { .. }
        ));
    }

    #[test]
    fn identity_must_be_zero() {
        // C2 written with identity at index 1.
        let err = Group::validate(vec![vec![1, 0], vec![0, 1]]).unwrap_err();
        assert!(matches!(err, GroupError::IdentityNotZero { .. }));
    }

    #[test]
    fn power_and_orders() {
        let c6 = construct::cyclic(6).unwrap();
        assert_eq!(c6.element_order(1), 6);
        assert_eq!(c6.power(1, 0), 0);
        assert_eq!(c6.element_order(0), 1);
        let c4 = construct::cyclic(4).unwrap();
        assert_eq!(c4.power(1, 2), 2); // the involution
        let c5 = construct::cyclic(5).unwrap();
        assert_eq!(c5.power(1, 7), c5.power(1, 2)); // exponent mod order
        let g = construct::cyclic(12).unwrap();
        for x in 0..g.n() {
            assert_eq!(g.power(x, g.element_order(x)), 0);
        }
    }

    #[test]
    fn q8_order_four_elements() {
        let q8 = construct::generalized_quaternion(8).unwrap();
        let order4 = (0..8).filter(|&x| q8.element_order(x) == 4).count();
        assert_eq!(order4, 6);
        assert_eq!(q8.order_spectrum().entries, vec![(1, 1), (2, 1), (4, 6)]);
    }

    #[test]
    fn spectrum_examples() {
        let d8 = construct::dihedral(8).unwrap();
        assert_eq!(d8.order_spectrum().entries, vec![(1, 1), (2, 5), (4, 2)]);
        let c5 = construct::cyclic(5).unwrap();
        assert_eq!(c5.order_spectrum().entries, vec![(1, 1), (5, 4)]);
    }

    #[test]
    fn conformality() {
        let a = construct::abelian(&[4, 4]).unwrap();
        let b = construct::cyclic(2)
            .unwrap()
            .direct_product(&construct::generalized_quaternion(8).unwrap())
            .unwrap();
        assert!(are_conformal(&a, &b));
        assert!(are_conformal(&a, &a));
        let c4 = construct::cyclic(4).unwrap();
        let v4 = construct::abelian(&[2, 2]).unwrap();
        assert!(!are_conformal(&c4, &v4));
    }

    #[test]
    fn direct_product_c2_c3_is_c6() {
        let p = construct::cyclic(2)
            .unwrap()
            .direct_product(&construct::cyclic(3).unwrap())
            .unwrap();
        let c6 = construct::cyclic(6).unwrap();
        assert!(are_isomorphic_groups(&p, &c6).is_some());
    }

    #[test]
    fn product_spectrum_lcm_composition() {
        let g = construct::dihedral(8).unwrap();
        let h = construct::cyclic(6).unwrap();
        let p = g.direct_product(&h).unwrap();
        let sp = p.order_spectrum();
        let sg = g.order_spectrum();
        let sh = h.order_spectrum();
        for &(k, c) in &sp.entries {
            let expect: u32 = sg
                .entries
                .iter()
                .flat_map(|&(a, ca)| {
                    sh.entries.iter().filter_map(move |&(b, cb)| {
                        (lcm(a as usize, b as usize) == k as usize).then_some(ca * cb)
                    })
                })
                .sum();
            assert_eq!(c, expect, "order {k}");
        }
    }

    fn lcm(a: usize, b: usize) -> usize {
        a / gcd(a, b) * b
    }
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    #[test]
    fn product_cap_enforced() {
        let g = construct::cyclic(100).unwrap();
        let h = construct::cyclic(100).unwrap();
        assert!(matches!(
            g.direct_product(&h),
            Err(GroupError::ProductTooLarge { .. })
        ));
    }
}
