//! Turn a completed coset table into a concrete [`Group`]: the generators act
//! as permutations on the cosets, and the permutation group they generate is
//! closed under composition by breadth-first search.

use std::collections::HashMap;

use super::{CosetTable, FpError, TableStatus};
use crate::group::Group;
use crate::order_cap;

pub fn realize(table: &CosetTable) -> Result<Group, FpError> {
    Ok(realize_with_generators(table)?.0)
}

/// Realize the table and also return, for each presentation generator, its
/// element index in the resulting group.
pub fn realize_with_generators(table: &CosetTable) -> Result<(Group, Vec<usize>), FpError> {
    if table.status != TableStatus::Complete {
        return Err(FpError::IncompleteTable);
    }
    let n = table.live();
    let gens: Vec<Vec<u32>> = (0..table.num_generators)
        .map(|g| table.rows.iter().map(|row| row[2 * g]).collect())
        .collect();

    let identity: Vec<u32> = (0..n as u32).collect();
    let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
    let mut elements: Vec<Vec<u32>> = vec![identity.clone()];
    index.insert(identity, 0);
    let mut head = 0;
    while head < elements.len() {
        for g in &gens {
            let composed = compose(&elements[head], g);
            if !index.contains_key(&composed) {
                if elements.len() >= order_cap() {
                    return Err(FpError::ClosureExceedsCap(order_cap()));
                }
                index.insert(composed.clone(), elements.len());
                elements.push(composed);
            }
        }
        head += 1;
    }
    // Regular action on the cosets of the trivial subgroup.
    debug_assert_eq!(elements.len(), n);

    let m = elements.len();
    let mut flat = vec![0u32; m * m];
    for i in 0..m {
        for j in 0..m {
            let prod = compose(&elements[i], &elements[j]);
            flat[i * m + j] = index[&prod] as u32;
        }
    }
    let gen_indices = gens.iter().map(|g| index[g]).collect();
    let group = Group::from_valid_flat(m, flat, format!("fp:{m}"));
    Ok((group, gen_indices))
}

/// Apply `p` then `q`.
fn compose(p: &[u32], q: &[u32]) -> Vec<u32> {
    p.iter().map(|&x| q[x as usize]).collect()
}

#[cfg(test)]
mod tests {
    use crate::construct;
    use crate::fp::{parse_presentation, realize, realize_with_generators, todd_coxeter};
    use crate::group::are_isomorphic_groups;

    fn realize_text(text: &str) -> crate::group::Group {
        let p = parse_presentation(text).unwrap();
        let t = todd_coxeter(&p, 100_000).unwrap();
        realize(&t).unwrap()
    }

    #[test]
    fn cyclic_five() {
        let g = realize_text("gens: a\nrel: a^5");
        assert!(are_isomorphic_groups(&g, &construct::cyclic(5).unwrap()).is_some());
    }

    #[test]
    fn s3_matches_dihedral_six() {
        let g = realize_text("gens: x y\nrel: x^2\nrel: y^2\nrel: (x y)^3");
        assert_eq!(g.n(), 6);
        assert!(are_isomorphic_groups(&g, &construct::dihedral(6).unwrap()).is_some());
    }

    #[test]
    fn realized_group_satisfies_relators() {
        let text = "gens: x y\nrel: x^2\nrel: y^3\nrel: (x y)^4";
        let p = parse_presentation(text).unwrap();
        let t = todd_coxeter(&p, 100_000).unwrap();
        let (g, gen_elems) = realize_with_generators(&t).unwrap();
        assert_eq!(g.n(), 24); // S4
        for rel in &p.relators {
            let mut acc = 0usize;
            for l in rel {
                let mut e = gen_elems[l.gen];
                if l.inverse {
                    e = g.inv(e);
                }
                acc = g.mul(acc, e);
            }
            assert_eq!(acc, 0, "relator must evaluate to the identity");
        }
    }
}
