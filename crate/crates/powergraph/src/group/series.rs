//! Structure predicates: central and derived series, Hall subgroups,
//! conjugacy classes.

use super::{Group, GroupError, Subgroup};

impl Group {
    /// Closure of `seeds` (plus the identity) under products.
    pub fn subgroup_closure(&self, seeds: &[usize]) -> Subgroup {
        let mut member = vec![false; self.n];
        member[0] = true;
        let mut list = vec![0u32];
        let mut queue: Vec<u32> = Vec::new();
        for &s in seeds {
            if !member[s] {
                member[s] = true;
                list.push(s as u32);
                queue.push(s as u32);
            }
        }
        while let Some(a) = queue.pop() {
            let mut k = 0;
            while k < list.len() {
                let b = list[k] as usize;
                for p in [self.mul(a as usize, b), self.mul(b, a as usize)] {
                    if !member[p] {
                        member[p] = true;
                        list.push(p as u32);
                        queue.push(p as u32);
                    }
                }
                k += 1;
            }
        }
        list.sort_unstable();
        Subgroup { members: list }
    }

    pub fn center(&self) -> Subgroup {
        let members = (0..self.n)
            .filter(|&x| (0..self.n).all(|g| self.mul(x, g) == self.mul(g, x)))
            .map(|x| x as u32)
            .collect();
        Subgroup { members }
    }

    /// Upper central series `Z_1 <= Z_2 <= ...` until it stabilizes.
    ///
    /// `Z_{i+1} = { x : [x, g] in Z_i for all g }`, starting from the center.
    pub fn upper_central_series(&self) -> Vec<Subgroup> {
        let mut series: Vec<Subgroup> = Vec::new();
        let mut in_z = vec![false; self.n];
        in_z[0] = true;
        loop {
            let next: Vec<u32> = (0..self.n)
                .filter(|&x| {
                    (0..self.n).all(|g| {
                        let comm = self.mul(
                            self.mul(self.inv(x), self.inv(g)),
                            self.mul(x, g),
                        );
                        in_z[comm]
                    })
                })
                .map(|x| x as u32)
                .collect();
            let grew = match series.last() {
                Some(prev) => next.len() > prev.members.len(),
                None => true,
            };
            if !grew {
                return series;
            }
            for &x in &next {
                in_z[x as usize] = true;
            }
            series.push(Subgroup { members: next });
            if series.last().unwrap().members.len() == self.n {
                return series;
            }
        }
    }

    /// Nilpotent iff the upper central series reaches the whole group.
    pub fn is_nilpotent(&self) -> bool {
        self.upper_central_series()
            .last()
            .is_some_and(|z| z.is_whole(self))
    }

    /// Cross-check for nilpotency: for each prime `p | n`, the elements of
    /// p-power order must number exactly the p-part of `n` and be closed under
    /// products (then they form the unique p-Sylow subgroup).
    pub fn is_nilpotent_by_sylow_count(&self) -> bool {
        for (p, a) in factorize(self.n) {
            let p_part = p.pow(a as u32);
            let elems: Vec<usize> = (0..self.n)
                .filter(|&x| is_power_of(self.element_order(x), p))
                .collect();
            if elems.len() != p_part {
                return false;
            }
            let in_set: Vec<bool> = {
                let mut v = vec![false; self.n];
                for &x in &elems {
                    v[x] = true;
                }
                v
            };
            for &x in &elems {
                for &y in &elems {
                    if !in_set[self.mul(x, y)] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Derived series `G >= G' >= G'' >= ...` until it stabilizes.
    pub fn derived_series(&self) -> Vec<Subgroup> {
        let mut series = vec![Subgroup {
            members: (0..self.n as u32).collect(),
        }];
        loop {
            let current = series.last().unwrap();
            let commutators: Vec<usize> = current
                .members
                .iter()
                .flat_map(|&a| {
                    current.members.iter().map(move |&b| {
                        let (a, b) = (a as usize, b as usize);
                        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
                    })
                })
                .collect();
            let derived = self.subgroup_closure(&commutators);
            if derived.members.len() == current.members.len() {
                return series;
            }
            let done = derived.is_trivial();
            series.push(derived);
            if done {
                return series;
            }
        }
    }

    /// Solvable iff the derived series reaches the trivial subgroup.
    pub fn is_solvable(&self) -> bool {
        self.derived_series()
            .last()
            .is_some_and(|d| d.is_trivial())
    }

    /// The normal Hall subgroup of order `m`, when it exists.
    ///
    /// Collects the elements whose order divides `m`; if they number exactly
    /// `m` and are product-closed they form a characteristic (hence normal)
    /// subgroup.
    pub fn normal_hall_subgroup(&self, m: usize) -> Result<Option<Subgroup>, GroupError> {
        if m == 0 || self.n % m != 0 || gcd(m, self.n / m) != 1 {
            return Err(GroupError::NotHallDivisor { m, n: self.n });
        }
        let members: Vec<u32> = (0..self.n)
            .filter(|&x| m % self.element_order(x) == 0)
            .map(|x| x as u32)
            .collect();
        if members.len() != m {
            return Ok(None);
        }
        let mut in_set = vec![false; self.n];
        for &x in &members {
            in_set[x as usize] = true;
        }
        for &x in &members {
            for &y in &members {
                if !in_set[self.mul(x as usize, y as usize)] {
                    return Ok(None);
                }
            }
        }
        Ok(Some(Subgroup { members }))
    }

    /// Conjugacy classes as sorted member lists, by smallest representative.
    pub fn conjugacy_classes(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.n];
        let mut classes = Vec::new();
        for x in 0..self.n {
            if seen[x] {
                continue;
            }
            let mut class = Vec::new();
            for g in 0..self.n {
                let c = self.mul(self.mul(self.inv(g), x), g);
                if !seen[c] {
                    seen[c] = true;
                    class.push(c as u32);
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    /// Size of the conjugacy class of each element.
    pub fn conjugacy_class_sizes(&self) -> Vec<u32> {
        let mut sizes = vec![0u32; self.n];
        for class in self.conjugacy_classes() {
            for &x in &class {
                sizes[x as usize] = class.len() as u32;
            }
        }
        sizes
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn factorize(mut n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut a = 0;
            while n % p == 0 {
                n /= p;
                a += 1;
            }
            out.push((p, a));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn is_power_of(mut m: usize, p: usize) -> bool {
    while m % p == 0 {
        m /= p;
    }
    m == 1
}
