//! Direct constructions of the standard group families: cyclic, abelian,
//! dihedral, generalized quaternion, Heisenberg, and semidirect products with
//! an explicit automorphism action. A small expression grammar
//! (`cyclic:6`, `abelian:4x4`, `product:(A,B)`, ...) drives the CLI and
//! catalog manifests.

use thiserror::Error;

use crate::group::{Group, GroupError};
use crate::order_cap;

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("order {0} exceeds cap {1}")]
    CapExceeded(usize, usize),
    #[error("order must be positive")]
    ZeroOrder,
    #[error("dihedral order must be even, got {0}")]
    OddOrder(usize),
    #[error("generalized quaternion order must be 2^k with k >= 3, got {0}")]
    NotQuaternionOrder(usize),
    #[error("{0} is not an odd prime")]
    NotOddPrime(usize),
    #[error("invalid automorphism action: {0}")]
    InvalidAction(String),
    #[error("construction syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error(transparent)]
    Group(#[from] GroupError),
}

fn check_cap(n: usize) -> Result<usize, ConstructError> {
    if n == 0 {
        return Err(ConstructError::ZeroOrder);
    }
    if n > order_cap() {
        return Err(ConstructError::CapExceeded(n, order_cap()));
    }
    Ok(n)
}

/// The cyclic group of order `n`: `table[i][j] = (i + j) mod n`.
pub fn cyclic(n: usize) -> Result<Group, ConstructError> {
    check_cap(n)?;
    let mut table = vec![0u32; n * n];
    for i in 0..n {
        for j in 0..n {
            table[i * n + j] = ((i + j) % n) as u32;
        }
    }
    Ok(Group::from_valid_flat(n, table, format!("cyclic:{n}")))
}

/// Direct sum of cyclic groups with the given factors.
pub fn abelian(factors: &[usize]) -> Result<Group, ConstructError> {
    if factors.is_empty() {
        return cyclic(1);
    }
    let mut g = cyclic(factors[0])?;
    for &f in &factors[1..] {
        g = g.direct_product(&cyclic(f)?)?;
    }
    let label = format!(
        "abelian:{}",
        factors
            .iter()
            .map(|f| f.to_string())
            .collect::<Vec<_>>()
            .join("x")
    );
    Ok(g.with_label(label))
}

/// Elementary abelian group of order `p^k`.
pub fn elementary_abelian(p: usize, k: usize) -> Result<Group, ConstructError> {
    abelian(&vec![p; k])
}

/// The dihedral group of the given (even) order. Rotations occupy indices
/// `0..m`, reflections `m..2m` with `m = order / 2`.
pub fn dihedral(order: usize) -> Result<Group, ConstructError> {
    if order == 0 || order % 2 != 0 {
        return Err(ConstructError::OddOrder(order));
    }
    check_cap(order)?;
    let m = order / 2;
    let n = order;
    let mut table = vec![0u32; n * n];
    for i in 0..m {
        for j in 0..m {
            table[i * n + j] = ((i + j) % m) as u32; // r^i r^j
            table[i * n + (m + j)] = (m + (m + j - i) % m) as u32; // r^i (s r^j)
            table[(m + i) * n + j] = (m + (i + j) % m) as u32; // (s r^i) r^j
            table[(m + i) * n + (m + j)] = ((m + j - i) % m) as u32; // (s r^i)(s r^j)
        }
    }
    Ok(Group::from_valid_flat(n, table, format!("dihedral:{order}")))
}

/// The generalized quaternion group of order `2^k`, `k >= 3`. Indices `0..m`
/// hold `a^i`, indices `m..2m` hold `a^i b`, with `m = order / 2`,
/// `b^2 = a^{m/2}` and `b a b^{-1} = a^{-1}`.
pub fn generalized_quaternion(order: usize) -> Result<Group, ConstructError> {
    if order < 8 || !order.is_power_of_two() {
        return Err(ConstructError::NotQuaternionOrder(order));
    }
    check_cap(order)?;
    let m = order / 2;
    let n = order;
    let mut table = vec![0u32; n * n];
    for i in 0..m {
        for j in 0..m {
            table[i * n + j] = ((i + j) % m) as u32; // a^i a^j
            table[i * n + (m + j)] = (m + (i + j) % m) as u32; // a^i (a^j b)
            table[(m + i) * n + j] = (m + (i + m - j) % m) as u32; // (a^i b) a^j = a^{i-j} b
            table[(m + i) * n + (m + j)] = ((i + m - j + m / 2) % m) as u32; // (a^i b)(a^j b)
        }
    }
    Ok(Group::from_valid_flat(
        n,
        table,
        format!("quaternion:{order}"),
    ))
}

/// The Heisenberg group of upper unitriangular 3x3 matrices over Z_p, for an
/// odd prime `p`: order `p^3`, exponent `p`, nonabelian.
pub fn heisenberg(p: usize) -> Result<Group, ConstructError> {
    if p < 3 || p % 2 == 0 || !is_prime(p) {
        return Err(ConstructError::NotOddPrime(p));
    }
    let n = check_cap(p * p * p)?;
    let idx = |a: usize, b: usize, c: usize| a * p * p + b * p + c;
    let mut table = vec![0u32; n * n];
    for a1 in 0..p {
        for b1 in 0..p {
            for c1 in 0..p {
                let x = idx(a1, b1, c1);
                for a2 in 0..p {
                    for b2 in 0..p {
                        for c2 in 0..p {
                            let y = idx(a2, b2, c2);
                            let prod =
                                idx((a1 + a2) % p, (b1 + b2) % p, (c1 + c2 + a1 * b2) % p);
                            table[x * n + y] = prod as u32;
                        }
                    }
                }
            }
        }
    }
    Ok(Group::from_valid_flat(n, table, format!("heisenberg:{p}")))
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// A homomorphism from an acting group `H` into the automorphisms of a
/// target group `N`, given element-by-element as permutations of `N`.
#[derive(Debug, Clone)]
pub struct AutomorphismAction {
    acting: Group,
    target: Group,
    images: Vec<Vec<u32>>,
}

impl AutomorphismAction {
    /// Validates that every image is an automorphism of `target`, the identity
    /// of `acting` maps to the identity permutation, and the assignment is a
    /// homomorphism (checked on a generating set of `acting` against all
    /// elements, which propagates by closure).
    pub fn new(
        acting: Group,
        target: Group,
        images: Vec<Vec<u32>>,
    ) -> Result<AutomorphismAction, ConstructError> {
        if images.len() != acting.n() {
            return Err(ConstructError::InvalidAction(format!(
                "need one permutation per acting element: got {}, need {}",
                images.len(),
                acting.n()
            )));
        }
        for (h, perm) in images.iter().enumerate() {
            if !is_automorphism(&target, perm) {
                return Err(ConstructError::InvalidAction(format!(
                    "image of element {h} is not an automorphism of the target"
                )));
            }
        }
        if !images[0].iter().enumerate().all(|(i, &y)| i == y as usize) {
            return Err(ConstructError::InvalidAction(
                "identity must act trivially".into(),
            ));
        }
        for g in acting.greedy_generators() {
            for h in 0..acting.n() {
                let gh = acting.mul(g, h);
                for x in 0..target.n() {
                    let lhs = images[gh][x] as usize;
                    let rhs = images[g][images[h][x] as usize] as usize;
                    if lhs != rhs {
                        return Err(ConstructError::InvalidAction(format!(
                            "not a homomorphism at ({g}, {h})"
                        )));
                    }
                }
            }
        }
        Ok(AutomorphismAction {
            acting,
            target,
            images,
        })
    }

    pub fn acting(&self) -> &Group {
        &self.acting
    }

    pub fn target(&self) -> &Group {
        &self.target
    }
}

fn is_automorphism(g: &Group, perm: &[u32]) -> bool {
    if perm.len() != g.n() {
        return false;
    }
    let mut seen = vec![false; g.n()];
    for &y in perm {
        let y = y as usize;
        if y >= g.n() || seen[y] {
            return false;
        }
        seen[y] = true;
    }
    for a in 0..g.n() {
        for b in 0..g.n() {
            if perm[g.mul(a, b)] as usize != g.mul(perm[a] as usize, perm[b] as usize) {
                return false;
            }
        }
    }
    true
}

/// Semidirect product `N x| H` for a validated action:
/// `(n1, h1) * (n2, h2) = (n1 * action(h1)(n2), h1 * h2)`, with `(n, h)`
/// encoded as `n * |H| + h`.
pub fn semidirect_product(action: &AutomorphismAction) -> Result<Group, ConstructError> {
    let nn = action.target.n();
    let hh = action.acting.n();
    let n = check_cap(nn * hh)?;
    let mut table = vec![0u32; n * n];
    for n1 in 0..nn {
        for h1 in 0..hh {
            let x = n1 * hh + h1;
            for n2 in 0..nn {
                let twisted = action.images[h1][n2] as usize;
                let np = action.target.mul(n1, twisted);
                for h2 in 0..hh {
                    let y = n2 * hh + h2;
                    table[x * n + y] = (np * hh + action.acting.mul(h1, h2)) as u32;
                }
            }
        }
    }
    Ok(Group::from_valid_flat(n, table, "semidirect"))
}

/// Generalized dihedral group of the abelian group with the given factors:
/// the semidirect product by C2 acting by inversion.
pub fn generalized_dihedral(factors: &[usize]) -> Result<Group, ConstructError> {
    let a = abelian(factors)?;
    let c2 = cyclic(2)?;
    let identity: Vec<u32> = (0..a.n() as u32).collect();
    let inversion: Vec<u32> = (0..a.n()).map(|x| a.inv(x) as u32).collect();
    let action = AutomorphismAction::new(c2, a, vec![identity, inversion])?;
    let label = format!(
        "gendihedral:{}",
        factors
            .iter()
            .map(|f| f.to_string())
            .collect::<Vec<_>>()
            .join("x")
    );
    Ok(semidirect_product(&action)?.with_label(label))
}

/// Parse a construction expression: `cyclic:6`, `abelian:4x4`, `dihedral:8`,
/// `quaternion:8`, `heisenberg:3`, `gendihedral:3x3`, `product:(A,B)`
/// (recursively).
pub fn parse_construction(expr: &str) -> Result<Group, ConstructError> {
    let expr = expr.trim();
    let (g, rest) = parse_expr(expr, 0)?;
    if !rest.trim().is_empty() {
        return Err(ConstructError::Syntax {
            position: expr.len() - rest.len(),
            message: format!("trailing input {:?}", rest.trim()),
        });
    }
    Ok(g)
}

fn parse_expr(input: &str, offset: usize) -> Result<(Group, &str), ConstructError> {
    let input = input.trim_start();
    let colon = input.find(':').ok_or(ConstructError::Syntax {
        position: offset,
        message: "expected `name:arg`".into(),
    })?;
    let name = &input[..colon];
    let rest = &input[colon + 1..];
    match name {
        "product" => {
            let rest = rest.trim_start();
            let Some(inner) = rest.strip_prefix('(') else {
                return Err(ConstructError::Syntax {
                    position: offset + colon + 1,
                    message: "product needs `(A,B)`".into(),
                });
            };
            let (a, after_a) = parse_expr(inner, offset + colon + 2)?;
            let after_a = after_a.trim_start();
            let Some(after_comma) = after_a.strip_prefix(',') else {
                return Err(ConstructError::Syntax {
                    position: offset,
                    message: "product needs a `,` between factors".into(),
                });
            };
            let (b, after_b) = parse_expr(after_comma, offset)?;
            let after_b = after_b.trim_start();
            let Some(tail) = after_b.strip_prefix(')') else {
                return Err(ConstructError::Syntax {
                    position: offset,
                    message: "unclosed `(` in product".into(),
                });
            };
            Ok((a.direct_product(&b)?, tail))
        }
        _ => {
            // Scalar or `x`-separated integer arguments.
            let end = rest
                .find(|c: char| !(c.is_ascii_digit() || c == 'x'))
                .unwrap_or(rest.len());
            let (arg, tail) = rest.split_at(end);
            let ints: Vec<usize> = arg
                .split('x')
                .map(|t| {
                    t.parse::<usize>().map_err(|_| ConstructError::Syntax {
                        position: offset + colon + 1,
                        message: format!("bad integer {t:?} in {name}:{arg}"),
                    })
                })
                .collect::<Result<_, _>>()?;
            let single = |ints: &[usize]| -> Result<usize, ConstructError> {
                if ints.len() == 1 {
                    Ok(ints[0])
                } else {
                    Err(ConstructError::Syntax {
                        position: offset,
                        message: format!("{name} takes a single integer"),
                    })
                }
            };
            let g = match name {
                "cyclic" => cyclic(single(&ints)?)?,
                "abelian" => abelian(&ints)?,
                "dihedral" => dihedral(single(&ints)?)?,
                "quaternion" => generalized_quaternion(single(&ints)?)?,
                "heisenberg" => heisenberg(single(&ints)?)?,
                "gendihedral" => generalized_dihedral(&ints)?,
                other => {
                    return Err(ConstructError::Syntax {
                        position: offset,
                        message: format!("unknown construction {other:?}"),
                    })
                }
            };
            Ok((g, tail))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::are_isomorphic_groups;

    #[test]
    fn constructed_tables_validate() {
        // from_valid_flat re-validates in debug builds; spot-check explicitly.
        for g in [
            cyclic(1).unwrap(),
            cyclic(12).unwrap(),
            abelian(&[3, 3, 3]).unwrap(),
            dihedral(2).unwrap(),
            dihedral(18).unwrap(),
            generalized_quaternion(16).unwrap(),
            heisenberg(3).unwrap(),
            generalized_dihedral(&[3, 3]).unwrap(),
        ] {
            let table: Vec<Vec<u32>> = (0..g.n())
                .map(|i| (0..g.n()).map(|j| g.mul(i, j) as u32).collect())
                .collect();
            assert!(Group::validate(table).is_ok(), "{:?}", g.label());
        }
    }

    #[test]
    fn dihedral_structure() {
        let d8 = dihedral(8).unwrap();
        assert_eq!(d8.order_spectrum().entries, vec![(1, 1), (2, 5), (4, 2)]);
        // Exactly m reflections of order 2, rotation subgroup cyclic of order m.
        let m = 4;
        assert!((m..8).all(|x| d8.element_order(x) == 2));
        let rotations = d8.subgroup_closure(&[1]);
        assert_eq!(rotations.len(), m);
        let d2 = dihedral(2).unwrap();
        assert!(are_isomorphic_groups(&d2, &cyclic(2).unwrap()).is_some());
        let d6 = dihedral(6).unwrap();
        assert!(!d6.is_abelian());
        assert!(matches!(dihedral(7), Err(ConstructError::OddOrder(7))));
    }

    #[test]
    fn quaternion_has_unique_involution() {
        for order in [8, 16, 32] {
            let q = generalized_quaternion(order).unwrap();
            let involutions = (0..q.n()).filter(|&x| q.element_order(x) == 2).count();
            assert_eq!(involutions, 1);
        }
        assert!(matches!(
            generalized_quaternion(12),
            Err(ConstructError::NotQuaternionOrder(12))
        ));
        assert!(matches!(
            generalized_quaternion(4),
            Err(ConstructError::NotQuaternionOrder(4))
        ));
    }

    #[test]
    fn heisenberg_exponent_p() {
        let h = heisenberg(3).unwrap();
        assert_eq!(h.n(), 27);
        assert!(!h.is_abelian());
        assert_eq!(h.order_spectrum().entries, vec![(1, 1), (3, 26)]);
        let e = abelian(&[3, 3, 3]).unwrap();
        assert_eq!(e.order_spectrum().entries, vec![(1, 1), (3, 26)]);
        assert!(are_isomorphic_groups(&h, &e).is_none());
        assert!(matches!(heisenberg(4), Err(ConstructError::NotOddPrime(4))));
    }

    #[test]
    fn abelian_square_roots() {
        let g = abelian(&[4, 4]).unwrap();
        for x in 0..g.n() {
            if g.element_order(x) == 2 {
                let roots = (0..g.n()).filter(|&y| g.mul(y, y) == x).count();
                assert_eq!(roots, 4);
            }
        }
    }

    #[test]
    fn trivial_action_equals_direct_product() {
        let n = dihedral(8).unwrap();
        let h = cyclic(3).unwrap();
        let identity: Vec<u32> = (0..n.n() as u32).collect();
        let action =
            AutomorphismAction::new(h.clone(), n.clone(), vec![identity; 3]).unwrap();
        let sd = semidirect_product(&action).unwrap();
        let dp = n.direct_product(&h).unwrap();
        // Element-for-element: same encoding, same table.
        assert_eq!(sd.n(), dp.n());
        for a in 0..sd.n() {
            for b in 0..sd.n() {
                assert_eq!(sd.mul(a, b), dp.mul(a, b));
            }
        }
    }

    #[test]
    fn generalized_dihedral_of_c3c3() {
        let g = generalized_dihedral(&[3, 3]).unwrap();
        assert_eq!(g.n(), 18);
        assert_eq!(g.order_spectrum().entries, vec![(1, 1), (2, 9), (3, 8)]);
    }

    #[test]
    fn invalid_action_rejected() {
        let n = cyclic(4).unwrap();
        let c2 = cyclic(2).unwrap();
        // Swapping 0 and 2 is a permutation but not an automorphism.
        let bad = vec![vec![0, 1, 2, 3], vec![2, 1, 0, 3]];
        assert!(matches!(
            AutomorphismAction::new(c2, n, bad),
            Err(ConstructError::InvalidAction(_))
        ));
    }

    #[test]
    fn expression_parser() {
        assert_eq!(parse_construction("cyclic:6").unwrap().n(), 6);
        assert_eq!(parse_construction("abelian:4x4").unwrap().n(), 16);
        assert_eq!(parse_construction("quaternion:8").unwrap().n(), 8);
        assert_eq!(parse_construction("heisenberg:3").unwrap().n(), 27);
        assert_eq!(parse_construction("gendihedral:3x3").unwrap().n(), 18);
        let p = parse_construction("product:(cyclic:2,quaternion:8)").unwrap();
        assert_eq!(p.n(), 16);
        let nested = parse_construction("product:(product:(cyclic:2,cyclic:3),dihedral:8)").unwrap();
        assert_eq!(nested.n(), 48);
        assert!(parse_construction("frobnicate:9").is_err());
        assert!(parse_construction("product:(cyclic:2").is_err());
        assert!(parse_construction("cyclic:6 junk").is_err());
    }
}
