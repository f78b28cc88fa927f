use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{Coord, MatchGraph};

/// A perfect matching as sorted coordinate pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    pub edges: Vec<(Coord, Coord)>,
    pub weight: BigUint,
}

impl Matching {
    pub fn from_pairs(mut pairs: Vec<(Coord, Coord, u64)>) -> Matching {
        let weight = pairs.iter().fold(BigUint::one(), |acc, p| acc * p.2);
        for p in &mut pairs {
            if p.1 < p.0 {
                core::mem::swap(&mut p.0, &mut p.1);
            }
        }
        pairs.sort_unstable();
        Matching { edges: pairs.into_iter().map(|(a, b, _)| (a, b)).collect(), weight }
    }

    /// True if every vertex of `g` is covered once by edges of `g`.
    pub fn is_perfect_in(&self, g: &MatchGraph) -> bool {
        let mut hit = alloc::vec![false; g.vertex_count()];
        for &(a, b) in &self.edges {
            let (Some(x), Some(y)) = (g.position(a), g.position(b)) else { return false };
            if g.weight_between(x, y) == 0 || hit[x] || hit[y] {
                return false;
            }
            hit[x] = true;
            hit[y] = true;
        }
        hit.iter().all(|&h| h)
    }
}

/// Largest profile the column sweep accepts.
pub const MAX_PROFILE: usize = 20;
/// Vertex bound for counting by plain recursion.
pub const MAX_RECURSIVE: usize = 24;

/// Weighted number of perfect matchings.
pub fn count_matchings(b: &MatchGraph) -> Result<BigUint> {
    if b.vertex_count() % 2 == 1 {
        return Ok(BigUint::zero());
    }
    if b.vertex_count() == 0 {
        return Ok(BigUint::one());
    }
    if let Some(grid) = GridShape::detect(b) {
        if grid.rows <= MAX_PROFILE {
            return Ok(grid.count());
        }
    }
    if b.vertex_count() <= MAX_RECURSIVE {
        let mut covered = alloc::vec![false; b.vertex_count()];
        return Ok(count_rec(b, &mut covered));
    }
    Err(Error::TooLarge(format!("{} vertices without a narrow grid layout", b.vertex_count())))
}

fn count_rec(b: &MatchGraph, covered: &mut [bool]) -> BigUint {
    let Some(v) = covered.iter().position(|c| !c) else { return BigUint::one() };
    covered[v] = true;
    let mut total = BigUint::zero();
    for &u in b.neighbors(v) {
        if !covered[u] {
            covered[u] = true;
            total += count_rec(b, covered) * b.weight_between(v, u);
            covered[u] = false;
        }
    }
    covered[v] = false;
    total
}

/// All perfect matchings; fails once more than `cap` are found.
pub fn enumerate_matchings(b: &MatchGraph, cap: u64) -> Result<Vec<Matching>> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    let mut covered = alloc::vec![false; b.vertex_count()];
    enum_rec(b, &mut covered, &mut stack, &mut out, cap)?;
    Ok(out)
}

fn enum_rec(
    b: &MatchGraph,
    covered: &mut [bool],
    stack: &mut Vec<(usize, usize)>,
    out: &mut Vec<Matching>,
    cap: u64,
) -> Result<()> {
    let Some(v) = covered.iter().position(|c| !c) else {
        if out.len() as u64 >= cap {
            return Err(Error::CapExceeded { needed: out.len() as u128 + 1, cap });
        }
        let vs = b.vertices();
        out.push(Matching::from_pairs(
            stack.iter().map(|&(x, y)| (vs[x], vs[y], b.weight_between(x, y))).collect(),
        ));
        return Ok(());
    };
    covered[v] = true;
    for &u in b.neighbors(v) {
        if !covered[u] {
            covered[u] = true;
            stack.push((v, u));
            enum_rec(b, covered, stack, out, cap)?;
            stack.pop();
            covered[u] = false;
        }
    }
    covered[v] = false;
    Ok(())
}

// A board laid out on a rows x cols box, possibly with holes, whose edges
// join neighbouring cells or wrap from the first to the last column.
struct GridShape {
    rows: usize,
    cols: usize,
    present: Vec<bool>,
    right: Vec<u64>,
    down: Vec<u64>,
    seams: Vec<(usize, usize, u64)>,
}

impl GridShape {
    fn detect(b: &MatchGraph) -> Option<GridShape> {
        let vs = b.vertices();
        let r0 = vs.iter().map(|v| v.0).min()?;
        let c0 = vs.iter().map(|v| v.1).min()?;
        let rows = (vs.iter().map(|v| v.0).max()? - r0 + 1) as usize;
        let cols = (vs.iter().map(|v| v.1).max()? - c0 + 1) as usize;
        let cells = rows.checked_mul(cols)?;
        if cells > 1 << 24 {
            return None;
        }
        let cell = |c: Coord| (c.0 - r0) as usize * cols + (c.1 - c0) as usize;
        let mut g = GridShape {
            rows,
            cols,
            present: alloc::vec![false; cells],
            right: alloc::vec![0; cells],
            down: alloc::vec![0; cells],
            seams: Vec::new(),
        };
        for &v in vs {
            g.present[cell(v)] = true;
        }
        let mut seam_used = alloc::vec![false; cells];
        for (x, y, w) in b.indexed_edges() {
            let (a, z) = (vs[x].min(vs[y]), vs[x].max(vs[y]));
            if a.0 == z.0 && z.1 == a.1 + 1 {
                g.right[cell(a)] = w;
            } else if a.1 == z.1 && z.0 == a.0 + 1 {
                g.down[cell(a)] = w;
            } else {
                let (first, last) = if a.1 < z.1 { (a, z) } else { (z, a) };
                if first.1 != c0 || last.1 != c0 + cols as i64 - 1 || cols < 2 {
                    return None;
                }
                let (p, q) = (cell(first), cell(last));
                if core::mem::replace(&mut seam_used[p], true) || core::mem::replace(&mut seam_used[q], true) {
                    return None;
                }
                g.seams.push((p, q, w));
            }
        }
        if g.seams.is_empty() && rows > cols {
            g = g.transposed();
        }
        (g.seams.len() < 32).then_some(g)
    }

    fn transposed(&self) -> GridShape {
        let (r, c) = (self.rows, self.cols);
        let mut t = GridShape {
            rows: c,
            cols: r,
            present: alloc::vec![false; r * c],
            right: alloc::vec![0; r * c],
            down: alloc::vec![0; r * c],
            seams: Vec::new(),
        };
        for i in 0..r {
            for j in 0..c {
                let (src, dst) = (i * c + j, j * r + i);
                t.present[dst] = self.present[src];
                t.right[dst] = self.down[src];
                t.down[dst] = self.right[src];
            }
        }
        t
    }

    fn count(&self) -> BigUint {
        let mut total = BigUint::zero();
        let k = self.seams.len();
        for subset in 0u64..1 << k {
            let mut blocked: Vec<bool> = self.present.iter().map(|p| !p).collect();
            let mut weight = BigUint::one();
            for (bit, &(p, q, w)) in self.seams.iter().enumerate() {
                if subset >> bit & 1 == 1 {
                    blocked[p] = true;
                    blocked[q] = true;
                    weight *= w;
                }
            }
            let inner = match self.sweep::<u128>(&blocked) {
                Some(x) => BigUint::from(x),
                None => self.sweep::<BigUint>(&blocked).expect("big integers do not overflow"),
            };
            total += inner * weight;
        }
        total
    }

    // Broken-profile sweep, column by column. Bit r of the mask says the
    // next cell to visit in row r is already covered.
    fn sweep<W: Acc>(&self, blocked: &[bool]) -> Option<W> {
        let (rows, cols) = (self.rows, self.cols);
        let mut states = alloc::vec![W::acc_zero(); 1 << rows];
        let mut next = states.clone();
        states[0] = W::acc_one();
        for c in 0..cols {
            for r in 0..rows {
                let here = r * cols + c;
                let bit = 1usize << r;
                for mask in 0..states.len() {
                    if states[mask].acc_is_zero() {
                        continue;
                    }
                    let v = core::mem::replace(&mut states[mask], W::acc_zero());
                    let covered = mask & bit != 0;
                    if covered && blocked[here] {
                        continue;
                    }
                    if covered || blocked[here] {
                        next[mask & !bit].add_prod(&v, 1)?;
                        continue;
                    }
                    let w = self.right[here];
                    if w > 0 && c + 1 < cols && !blocked[here + 1] {
                        next[mask | bit].add_prod(&v, w)?;
                    }
                    let w = self.down[here];
                    if w > 0 && r + 1 < rows && mask & (bit << 1) == 0 && !blocked[here + cols] {
                        next[(mask & !bit) | (bit << 1)].add_prod(&v, w)?;
                    }
                }
                core::mem::swap(&mut states, &mut next);
            }
        }
        Some(core::mem::replace(&mut states[0], W::acc_zero()))
    }
}

trait Acc: Clone {
    fn acc_zero() -> Self;
    fn acc_one() -> Self;
    fn acc_is_zero(&self) -> bool;
    /// self += a * w, or None on overflow.
    fn add_prod(&mut self, a: &Self, w: u64) -> Option<()>;
}

impl Acc for u128 {
    fn acc_zero() -> Self {
        0
    }
    fn acc_one() -> Self {
        1
    }
    fn acc_is_zero(&self) -> bool {
        *self == 0
    }
    fn add_prod(&mut self, a: &Self, w: u64) -> Option<()> {
        *self = self.checked_add(a.checked_mul(u128::from(w))?)?;
        Some(())
    }
}

impl Acc for BigUint {
    fn acc_zero() -> Self {
        Zero::zero()
    }
    fn acc_one() -> Self {
        One::one()
    }
    fn acc_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_prod(&mut self, a: &Self, w: u64) -> Option<()> {
        *self += a * w;
        Some(())
    }
}
