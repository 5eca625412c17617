//! Todd-Coxeter coset enumeration over the trivial subgroup, Felsch-style:
//! define the lowest-numbered missing table entry, push deductions from
//! relator scans, and process coincidences with union-find merging.

use super::{invert_word, FpError, Presentation, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableStatus {
    Complete,
    Overflowed,
}

/// A completed coset table: one row per live coset, one column per generator
/// and per inverse generator (columns `2g` and `2g + 1`).
#[derive(Debug, Clone)]
pub struct CosetTable {
    pub num_generators: usize,
    pub rows: Vec<Vec<u32>>,
    pub status: TableStatus,
}

impl CosetTable {
    pub fn live(&self) -> usize {
        self.rows.len()
    }
}

/// Enumerate the cosets of the trivial subgroup of the presented group.
/// On completion the live-coset count equals the group order.
pub fn todd_coxeter(p: &Presentation, max_cosets: usize) -> Result<CosetTable, FpError> {
    todd_coxeter_seeded(p, max_cosets, None)
}

/// As [`todd_coxeter`], but with a randomized deduction-processing order when
/// a seed is given. The final table must be independent of that order; the
/// knob exists so tests can exercise confluence.
pub fn todd_coxeter_seeded(
    p: &Presentation,
    max_cosets: usize,
    shuffle_seed: Option<u64>,
) -> Result<CosetTable, FpError> {
    assert!(max_cosets >= 1);
    let ncols = 2 * p.generators.len();
    let mut rotations_by_first: Vec<Vec<Vec<usize>>> = vec![Vec::new(); ncols.max(1)];
    for rel in &p.relators {
        for w in [rel.clone(), invert_word(rel)] {
            let cols = word_cols(&w);
            for k in 0..cols.len() {
                let mut rot = cols[k..].to_vec();
                rot.extend_from_slice(&cols[..k]);
                let first = rot[0];
                if !rotations_by_first[first].contains(&rot) {
                    rotations_by_first[first].push(rot);
                }
            }
        }
    }

    let mut e = Enumerator {
        ncols,
        table: vec![vec![NONE; ncols]],
        parent: vec![0],
        dead: vec![false],
        deductions: Vec::new(),
        rng: shuffle_seed.map(|s| s | 1),
        max_cosets,
        rotations_by_first,
    };

    loop {
        e.drain_deductions();
        let Some((alpha, col)) = e.first_missing() else {
            // Full safety pass: every relator must trace trivially at every
            // live coset; any violation is processed as a coincidence and
            // enumeration resumes.
            if e.final_scan_clean(&p.relators) {
                break;
            }
            continue;
        };
        if e.table.len() >= max_cosets {
            return Err(FpError::Overflow(max_cosets));
        }
        let fresh = e.table.len() as u32;
        e.table.push(vec![NONE; e.ncols]);
        e.parent.push(fresh);
        e.dead.push(false);
        e.set(alpha, col, fresh);
    }

    Ok(e.compact(p.generators.len()))
}

const NONE: u32 = u32::MAX;

fn word_cols(w: &Word) -> Vec<usize> {
    w.iter().map(|l| 2 * l.gen + usize::from(l.inverse)).collect()
}

#[inline]
fn inv_col(c: usize) -> usize {
    c ^ 1
}

struct Enumerator {
    ncols: usize,
    table: Vec<Vec<u32>>,
    parent: Vec<u32>,
    dead: Vec<bool>,
    deductions: Vec<(u32, usize)>,
    rng: Option<u64>,
    max_cosets: usize,
    rotations_by_first: Vec<Vec<Vec<usize>>>,
}

impl Enumerator {
    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let up = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = up;
            x = up;
        }
        x
    }

    fn entry(&mut self, a: u32, c: usize) -> Option<u32> {
        let v = self.table[a as usize][c];
        if v == NONE {
            None
        } else {
            Some(self.find(v))
        }
    }

    /// Record `a * c = b` (and the mirror entry), queueing coincidences when
    /// either slot is already filled differently.
    fn set(&mut self, a: u32, c: usize, b: u32) {
        let a = self.find(a);
        let b = self.find(b);
        match self.entry(a, c) {
            Some(d) if d == b => {}
            Some(d) => self.coincide(d, b),
            None => {
                self.table[a as usize][c] = b;
                self.deductions.push((a, c));
                match self.entry(b, inv_col(c)) {
                    Some(d) if d == a => {}
                    Some(d) => self.coincide(d, a),
                    None => {
                        self.table[b as usize][inv_col(c)] = a;
                        self.deductions.push((b, inv_col(c)));
                    }
                }
            }
        }
    }

    fn coincide(&mut self, a: u32, b: u32) {
        let mut queue = vec![(a, b)];
        while let Some((a, b)) = queue.pop() {
            let a = self.find(a);
            let b = self.find(b);
            if a == b {
                continue;
            }
            let (keep, kill) = if a < b { (a, b) } else { (b, a) };
            self.parent[kill as usize] = keep;
            self.dead[kill as usize] = true;
            for c in 0..self.ncols {
                let d = self.table[kill as usize][c];
                if d == NONE {
                    continue;
                }
                let d = self.find(d);
                let cur = self.table[keep as usize][c];
                if cur == NONE {
                    self.table[keep as usize][c] = d;
                    self.deductions.push((keep, c));
                } else {
                    let cur = self.find(cur);
                    if cur != d {
                        queue.push((cur, d));
                    }
                }
            }
        }
    }

    fn drain_deductions(&mut self) {
        while !self.deductions.is_empty() {
            let idx = match self.rng {
                Some(ref mut s) => {
                    // xorshift64 picks an arbitrary pending deduction.
                    *s ^= *s << 13;
                    *s ^= *s >> 7;
                    *s ^= *s << 17;
                    (*s % self.deductions.len() as u64) as usize
                }
                None => self.deductions.len() - 1,
            };
            let (a, c) = self.deductions.swap_remove(idx);
            let a = self.find(a);
            if self.dead[a as usize] {
                continue;
            }
            let rotations = std::mem::take(&mut self.rotations_by_first[c]);
            for w in &rotations {
                self.scan(a, w);
            }
            self.rotations_by_first[c] = rotations;
        }
    }

    /// Scan the cyclic relator `w` from coset `base` (so `base * w = base`):
    /// deduce a single missing entry, or process a coincidence when the scan
    /// closes on two different cosets.
    fn scan(&mut self, base: u32, w: &[usize]) {
        let base = self.find(base);
        if self.dead[base as usize] {
            return;
        }
        let mut f = base;
        let mut i = 0;
        while i < w.len() {
            match self.entry(f, w[i]) {
                Some(next) => {
                    f = next;
                    i += 1;
                }
                None => break,
            }
        }
        if i == w.len() {
            let b0 = self.find(base);
            if f != b0 {
                self.coincide(f, b0);
            }
            return;
        }
        let mut b = self.find(base);
        let mut j = w.len();
        while j > i + 1 {
            match self.entry(b, inv_col(w[j - 1])) {
                Some(prev) => {
                    b = prev;
                    j -= 1;
                }
                None => break,
            }
        }
        if j == i + 1 {
            self.set(f, w[i], b);
        }
    }

    fn first_missing(&mut self) -> Option<(u32, usize)> {
        for a in 0..self.table.len() {
            if self.dead[a] {
                continue;
            }
            for c in 0..self.ncols {
                if self.entry(a as u32, c).is_none() {
                    return Some((a as u32, c));
                }
            }
        }
        None
    }

    fn final_scan_clean(&mut self, relators: &[Word]) -> bool {
        let before: Vec<u32> = (0..self.table.len() as u32)
            .filter(|&a| !self.dead[a as usize])
            .collect();
        for rel in relators {
            let cols = word_cols(rel);
            for &a in &before {
                if !self.dead[a as usize] {
                    self.scan(a, &cols);
                }
            }
        }
        self.deductions.is_empty() && before.iter().all(|&a| !self.dead[a as usize])
    }

    fn compact(&mut self, num_generators: usize) -> CosetTable {
        let mut remap = vec![u32::MAX; self.table.len()];
        let mut next = 0u32;
        for a in 0..self.table.len() {
            if !self.dead[a] {
                remap[a] = next;
                next += 1;
            }
        }
        let mut rows = Vec::with_capacity(next as usize);
        for a in 0..self.table.len() {
            if self.dead[a] {
                continue;
            }
            let row: Vec<u32> = (0..self.ncols)
                .map(|c| {
                    let v = self.table[a][c];
                    assert_ne!(v, NONE, "compact called on incomplete table");
                    remap[self.find(v) as usize]
                })
                .collect();
            rows.push(row);
        }
        debug_assert!(rows.len() <= self.max_cosets);
        CosetTable {
            num_generators,
            rows,
            status: TableStatus::Complete,
        }
    }
}
