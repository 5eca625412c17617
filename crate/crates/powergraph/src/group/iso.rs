//! Group isomorphism by backtracking over generator images.

use super::Group;

/// Find an isomorphism `phi: g -> h`, returned as the element bijection
/// `phi[x]`, or `None` when the groups are not isomorphic.
///
/// A greedy generating set of `g` is mapped onto candidate images in `h`
/// (ascending index, filtered by element order and conjugacy-class size);
/// each partial assignment is extended by closure and rejected on the first
/// contradiction. Cheap invariants (spectrum, center order, class-size
/// multiset, abelianness) prune whole searches up front.
pub fn are_isomorphic_groups(g: &Group, h: &Group) -> Option<Vec<u32>> {
    if g.n() != h.n() {
        return None;
    }
    if g.order_spectrum() != h.order_spectrum() {
        return None;
    }
    if g.is_abelian() != h.is_abelian() {
        return None;
    }
    if g.center().len() != h.center().len() {
        return None;
    }
    let g_class_sizes = g.conjugacy_class_sizes();
    let h_class_sizes = h.conjugacy_class_sizes();
    {
        let mut a = g_class_sizes.clone();
        let mut b = h_class_sizes.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return None;
        }
    }

    let gens = g.greedy_generators();
    let mut state = Partial::new(g.n());
    let mapping = search(g, h, &gens, 0, &mut state, &g_class_sizes, &h_class_sizes)?;
    debug_assert!(verify_isomorphism(g, h, &mapping));
    Some(mapping)
}

/// Full table check that `phi(xy) = phi(x) phi(y)` and `phi` is a bijection.
pub fn verify_isomorphism(g: &Group, h: &Group, phi: &[u32]) -> bool {
    if phi.len() != g.n() || g.n() != h.n() {
        return false;
    }
    let mut seen = vec![false; h.n()];
    for &y in phi {
        if seen[y as usize] {
            return false;
        }
        seen[y as usize] = true;
    }
    for x in 0..g.n() {
        for y in 0..g.n() {
            if phi[g.mul(x, y)] as usize != h.mul(phi[x] as usize, phi[y] as usize) {
                return false;
            }
        }
    }
    true
}

#[derive(Clone)]
struct Partial {
    /// Image in `h` of each `g`-element, where assigned.
    img: Vec<Option<u32>>,
    /// Preimage in `g` of each `h`-element, where assigned.
    pre: Vec<Option<u32>>,
    /// Elements of `g` with an assigned image; closed under products.
    known: Vec<u32>,
}

impl Partial {
    fn new(n: usize) -> Partial {
        let mut p = Partial {
            img: vec![None; n],
            pre: vec![None; n],
            known: vec![0],
        };
        p.img[0] = Some(0);
        p.pre[0] = Some(0);
        p
    }

    /// Assign `img[a] = b` and close under products. Returns false on any
    /// conflict (two images for one element, or two preimages for one image).
    fn extend(&mut self, g: &Group, h: &Group, a: usize, b: usize) -> bool {
        let mut queue: Vec<u32> = Vec::new();
        if !self.assign(a, b, &mut queue) {
            return false;
        }
        while let Some(x) = queue.pop() {
            let x = x as usize;
            let fx = self.img[x].unwrap() as usize;
            let mut k = 0;
            while k < self.known.len() {
                let y = self.known[k] as usize;
                let fy = self.img[y].unwrap() as usize;
                if !self.assign(g.mul(x, y), h.mul(fx, fy), &mut queue) {
                    return false;
                }
                if !self.assign(g.mul(y, x), h.mul(fy, fx), &mut queue) {
                    return false;
                }
                k += 1;
            }
        }
        true
    }

    fn assign(&mut self, x: usize, y: usize, queue: &mut Vec<u32>) -> bool {
        match (self.img[x], self.pre[y]) {
            (Some(cur), _) => cur as usize == y,
            (None, Some(_)) => false,
            (None, None) => {
                self.img[x] = Some(y as u32);
                self.pre[y] = Some(x as u32);
                self.known.push(x as u32);
                queue.push(x as u32);
                true
            }
        }
    }
}

fn search(
    g: &Group,
    h: &Group,
    gens: &[usize],
    depth: usize,
    state: &mut Partial,
    g_class_sizes: &[u32],
    h_class_sizes: &[u32],
) -> Option<Vec<u32>> {
    if depth == gens.len() {
        if state.known.len() != g.n() {
            return None;
        }
        let phi: Vec<u32> = state.img.iter().map(|o| o.unwrap()).collect();
        if verify_isomorphism(g, h, &phi) {
            return Some(phi);
        }
        return None;
    }
    let a = gens[depth];
    // The generator may already be determined by the closure so far.
    if state.img[a].is_some() {
        return search(g, h, gens, depth + 1, state, g_class_sizes, h_class_sizes);
    }
    let order = g.element_order(a);
    for b in 0..h.n() {
        if state.pre[b].is_some()
            || h.element_order(b) != order
            || h_class_sizes[b] != g_class_sizes[a]
        {
            continue;
        }
        let mut next = state.clone();
        if next.extend(g, h, a, b) {
            if let Some(phi) = search(g, h, gens, depth + 1, &mut next, g_class_sizes, h_class_sizes)
            {
                return Some(phi);
            }
        }
    }
    None
}
