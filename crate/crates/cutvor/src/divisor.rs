//! Subdivided graphs, G-admissible divisors, canonical extensions and chip-firing.

use crate::cochain::Cochain0;
use crate::error::{check_len, Error, Result};
use crate::graph::{Arrow, Multigraph};
use crate::lattice::{solve_laplacian, LengthFunction};
use crate::rational::floor_div;

/// The graph H obtained by replacing each edge e by a path of length ℓ_e.
///
/// Vertices of G keep their indices; the interior vertex x_j^e of the
/// canonical arrow of e (1 ≤ j < ℓ_e) comes after them, edge by edge.
#[derive(Clone, Debug)]
pub struct Subdivision {
    base: Multigraph,
    lengths: LengthFunction,
    offsets: Vec<usize>,
    graph: Multigraph,
}

impl Subdivision {
    pub fn new(base: Multigraph, lengths: LengthFunction) -> Result<Self> {
        check_len("edge lengths", base.edge_count(), lengths.as_slice().len())?;
        let n = base.vertex_count();
        let mut offsets = Vec::with_capacity(base.edge_count());
        let mut next = n;
        let mut edges = Vec::new();
        for (e, &(u, v)) in base.edges().iter().enumerate() {
            offsets.push(next);
            let l = lengths.get(e) as usize;
            let path: Vec<usize> = std::iter::once(u)
                .chain(next..next + l - 1)
                .chain(std::iter::once(v))
                .collect();
            edges.extend(path.windows(2).map(|w| (w[0], w[1])));
            next += l - 1;
        }
        let graph = Multigraph::new(next, &edges)?;
        Ok(Subdivision {
            base,
            lengths,
            offsets,
            graph,
        })
    }

    pub fn base(&self) -> &Multigraph {
        &self.base
    }

    pub fn lengths(&self) -> &LengthFunction {
        &self.lengths
    }

    /// H itself.
    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// The vertex x_j^a on arrow `a`, 0 ≤ j ≤ ℓ_e: the tail for j = 0, the head for j = ℓ_e.
    pub fn point(&self, a: Arrow, j: i64) -> usize {
        let l = self.lengths.get(a.edge);
        assert!((0..=l).contains(&j), "position {j} outside 0..={l}");
        let j = if a.forward { j } else { l - j };
        let (u, v) = self.base.endpoints(a.edge);
        if j == 0 {
            u
        } else if j == l {
            v
        } else {
            self.offsets[a.edge] + j as usize - 1
        }
    }

    /// Interior vertex indices of edge `e` in canonical order x_1, …, x_{ℓ-1}.
    pub fn interior(&self, e: usize) -> std::ops::Range<usize> {
        let start = self.offsets[e];
        start..start + self.lengths.get(e) as usize - 1
    }

    /// For an interior vertex of H: its edge and position on the canonical arrow.
    pub fn locate_interior(&self, x: usize) -> Option<(usize, i64)> {
        (0..self.base.edge_count())
            .find(|&e| self.interior(e).contains(&x))
            .map(|e| (e, (x - self.offsets[e]) as i64 + 1))
    }
}

/// An integer combination of vertices of H.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Divisor {
    pub coeffs: Vec<i64>,
}

impl Divisor {
    pub fn zero(h: &Subdivision) -> Self {
        Divisor {
            coeffs: vec![0; h.vertex_count()],
        }
    }

    pub fn degree(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len())
            .filter(|&i| self.coeffs[i] != 0)
            .collect()
    }

    pub fn add(&self, other: &Divisor) -> Divisor {
        Divisor {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Divisor) -> Divisor {
        Divisor {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

fn check_divisor(h: &Subdivision, d: &Divisor) -> Result<()> {
    check_len("divisor", h.vertex_count(), d.coeffs.len())
}

/// div(F) on H, with ord_x(F) = Σ over neighbours y of (F(y) − F(x)).
pub fn principal_divisor_h(h: &Subdivision, big_f: &[i64]) -> Result<Divisor> {
    check_len("function on H", h.vertex_count(), big_f.len())?;
    let hg = h.graph();
    let coeffs = (0..hg.vertex_count())
        .map(|x| {
            hg.out_arrows(x)
                .iter()
                .map(|&a| big_f[hg.head(a)] - big_f[x])
                .sum()
        })
        .collect();
    Ok(Divisor { coeffs })
}

/// At most one interior vertex per edge carries a nonzero value, and that value is 1.
pub fn is_g_admissible(h: &Subdivision, d: &Divisor) -> Result<bool> {
    check_divisor(h, d)?;
    Ok((0..h.base().edge_count()).all(|e| {
        let vals: Vec<i64> = h.interior(e).map(|x| d.coeffs[x]).collect();
        vals.iter().all(|&c| c == 0 || c == 1) && vals.iter().filter(|&&c| c == 1).count() <= 1
    }))
}

/// t^D on both orientations of every edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistFromDivisor {
    pub forward: Vec<i64>,
    pub backward: Vec<i64>,
}

impl TwistFromDivisor {
    pub fn at(&self, a: Arrow) -> i64 {
        if a.forward {
            self.forward[a.edge]
        } else {
            self.backward[a.edge]
        }
    }
}

/// t^D_a = Σ_{1≤j<ℓ} (ℓ − j) D(x_j^a).
pub fn twist_of(h: &Subdivision, d: &Divisor) -> Result<TwistFromDivisor> {
    check_divisor(h, d)?;
    let m = h.base().edge_count();
    let side = |a: Arrow| -> i64 {
        let l = h.lengths().get(a.edge);
        (1..l).map(|j| (l - j) * d.coeffs[h.point(a, j)]).sum()
    };
    Ok(TwistFromDivisor {
        forward: (0..m).map(|e| side(Arrow::forward(e))).collect(),
        backward: (0..m).map(|e| side(Arrow::backward(e))).collect(),
    })
}

/// ⌊(f(head) − f(tail) + t) / ℓ⌋ for the arrow `a`.
pub fn delta(h: &Subdivision, f: &[i64], t: i64, a: Arrow) -> i64 {
    let g = h.base();
    floor_div(f[g.head(a)] - f[g.tail(a)] + t, h.lengths().get(a.edge))
}

/// The unique extension f̃ of f to H with D + div(f̃) G-admissible.
pub fn canonical_extension(h: &Subdivision, f: &[i64], d: &Divisor) -> Result<Vec<i64>> {
    let g = h.base();
    check_len("vertex function", g.vertex_count(), f.len())?;
    check_divisor(h, d)?;
    let twist = twist_of(h, d)?;
    let mut out = vec![0i64; h.vertex_count()];
    out[..g.vertex_count()].copy_from_slice(f);
    for e in 0..g.edge_count() {
        let a = Arrow::forward(e);
        let (u, v) = g.endpoints(e);
        let l = h.lengths().get(e);
        let num = f[v] - f[u] + twist.at(a);
        let r = num.rem_euclid(l);
        // slope on the first segment; each later slope drops by D(x_j) and
        // gains one exactly where ℓ − j equals the remainder
        let mut slope = floor_div(num, l);
        let mut value = f[u];
        for j in 1..l {
            value += slope;
            let x = h.point(a, j);
            out[x] = value;
            let bump = i64::from(l - j == r);
            slope = slope - d.coeffs[x] + bump;
        }
    }
    Ok(out)
}

/// div_ℓ(f; D) = div(f̃).
pub fn div_ell(h: &Subdivision, f: &[i64], d: &Divisor) -> Result<Divisor> {
    principal_divisor_h(h, &canonical_extension(h, f, d)?)
}

/// M_v(D): fire the cut C_v(D) made of v and, along each edge leaving v, the
/// interior vertices up to the chip of D (if any).
pub fn chip_fire(h: &Subdivision, d: &Divisor, v: usize) -> Result<Divisor> {
    if !is_g_admissible(h, d)? {
        return Err(Error::NotAdmissible);
    }
    let g = h.base();
    if v >= g.vertex_count() {
        return Err(Error::Invalid(format!("vertex {v} out of range")));
    }
    let mut cut = vec![0i64; h.vertex_count()];
    cut[v] = 1;
    for &a in g.out_arrows(v) {
        let l = h.lengths().get(a.edge);
        let reach = (1..l).find(|&j| d.coeffs[h.point(a, j)] == 1).unwrap_or(0);
        for i in 1..=reach {
            cut[h.point(a, i)] = 1;
        }
    }
    Ok(d.add(&principal_divisor_h(h, &cut)?))
}

/// f (with f(0) = 0) such that D' = D + div_ℓ(f; D), or `None` if D' is not
/// linearly equivalent to D.
pub fn solve_equivalence(h: &Subdivision, d: &Divisor, d2: &Divisor) -> Result<Option<Vec<i64>>> {
    if !is_g_admissible(h, d)? || !is_g_admissible(h, d2)? {
        return Err(Error::NotAdmissible);
    }
    if d.degree() != d2.degree() {
        return Ok(None);
    }
    // div(F) = −Δ_H F, so solve Δ_H F = D − D'.
    let rhs = Cochain0::from_ints(&d.sub(d2).coeffs);
    let big_f = solve_laplacian(h.graph(), &rhs)?;
    let Some(big_f) = big_f.to_ints() else {
        return Ok(None);
    };
    let f = big_f[..h.base().vertex_count()].to_vec();
    let reached = d.add(&div_ell(h, &f, d)?);
    Ok((reached == *d2).then_some(f))
}

/// A sequence of vertices whose successive chip-firing moves take D to D'.
pub fn firing_sequence(h: &Subdivision, d: &Divisor, d2: &Divisor) -> Result<Option<Vec<usize>>> {
    let Some(f) = solve_equivalence(h, d, d2)? else {
        return Ok(None);
    };
    let min = f.iter().copied().min().unwrap_or(0);
    Ok(Some(
        f.iter()
            .enumerate()
            .flat_map(|(v, &x)| std::iter::repeat_n(v, (x - min) as usize))
            .collect(),
    ))
}

/// Applies chip-firing moves in order.
pub fn replay(h: &Subdivision, d: &Divisor, sequence: &[usize]) -> Result<Divisor> {
    sequence
        .iter()
        .try_fold(d.clone(), |acc, &v| chip_fire(h, &acc, v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge(l: i64) -> Subdivision {
        let g = Multigraph::new(2, &[(0, 1)]).unwrap();
        let lengths = LengthFunction::new(&g, vec![l]).unwrap();
        Subdivision::new(g, lengths).unwrap()
    }

    fn divisor(h: &Subdivision, entries: &[(usize, i64)]) -> Divisor {
        let mut d = Divisor::zero(h);
        for &(x, c) in entries {
            d.coeffs[x] += c;
        }
        d
    }

    #[test]
    fn subdivision_indexing() {
        let h = edge(3);
        assert_eq!(h.vertex_count(), 4);
        let a = Arrow::forward(0);
        assert_eq!(h.point(a, 0), 0);
        assert_eq!(h.point(a, 1), 2);
        assert_eq!(h.point(a, 2), 3);
        assert_eq!(h.point(a, 3), 1);
        for j in 0..=3 {
            assert_eq!(h.point(a, j), h.point(a.reversed(), 3 - j));
        }
        assert_eq!(h.locate_interior(3), Some((0, 2)));
    }

    #[test]
    fn principal_divisors() {
        let h = edge(2);
        let x1 = h.point(Arrow::forward(0), 1);
        let d = principal_divisor_h(&h, &[0, 0, 1]).unwrap();
        assert_eq!(d, divisor(&h, &[(0, 1), (1, 1), (x1, -2)]));
        assert_eq!(
            principal_divisor_h(&h, &[4, 4, 4]).unwrap(),
            Divisor::zero(&h)
        );

        let g = Multigraph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let k3 = Subdivision::new(g.clone(), LengthFunction::uniform(&g, 1).unwrap()).unwrap();
        let d = principal_divisor_h(&k3, &[1, 0, 0]).unwrap();
        assert_eq!(d.coeffs, vec![-2, 1, 1]);
    }

    #[test]
    fn admissibility() {
        let h = edge(3);
        let (x1, x2) = (2, 3);
        assert!(is_g_admissible(&h, &divisor(&h, &[(0, 5), (1, -2)])).unwrap());
        assert!(!is_g_admissible(&h, &divisor(&h, &[(x1, 1), (x2, 1)])).unwrap());
        assert!(!is_g_admissible(&h, &divisor(&h, &[(x1, 2)])).unwrap());
        assert!(is_g_admissible(&h, &divisor(&h, &[(x2, 1)])).unwrap());
    }

    #[test]
    fn twists() {
        let h = edge(3);
        let t = twist_of(&h, &divisor(&h, &[(2, 1)])).unwrap();
        assert_eq!((t.forward[0], t.backward[0]), (2, 1));
        let h = edge(2);
        let t = twist_of(&h, &divisor(&h, &[(2, 1)])).unwrap();
        assert_eq!((t.forward[0], t.backward[0]), (1, 1));
        assert_eq!(twist_of(&h, &Divisor::zero(&h)).unwrap().forward, vec![0]);
    }

    #[test]
    fn extension_on_a_single_edge() {
        let h = edge(3);
        let (x1, x2) = (2, 3);
        // order on H: u, v, x1, x2
        let ext = canonical_extension(&h, &[0, 1], &Divisor::zero(&h)).unwrap();
        assert_eq!(ext, vec![0, 1, 0, 0]);
        let dl = div_ell(&h, &[0, 1], &Divisor::zero(&h)).unwrap();
        assert_eq!(dl, divisor(&h, &[(1, -1), (x2, 1)]));

        let d = divisor(&h, &[(x1, 1)]);
        let ext = canonical_extension(&h, &[0, 1], &d).unwrap();
        assert_eq!(ext[x1], 1);
        assert!(is_g_admissible(&h, &d.add(&principal_divisor_h(&h, &ext).unwrap())).unwrap());

        let ext = canonical_extension(&h, &[0, 6], &Divisor::zero(&h)).unwrap();
        assert_eq!(ext, vec![0, 6, 2, 4]);
    }

    #[test]
    fn firing_on_a_single_edge() {
        let h = edge(2);
        let x1 = 2;
        let fired = chip_fire(&h, &Divisor::zero(&h), 0).unwrap();
        assert_eq!(fired, divisor(&h, &[(0, -1), (x1, 1)]));
        let d = divisor(&h, &[(x1, 1)]);
        let fired = chip_fire(&h, &d, 0).unwrap();
        assert_eq!(fired, d.add(&div_ell(&h, &[1, 0], &d).unwrap()));
        assert_eq!(fired, divisor(&h, &[(1, 1)]));
        assert_eq!(
            chip_fire(&h, &divisor(&h, &[(x1, 2)]), 0),
            Err(Error::NotAdmissible)
        );
    }

    #[test]
    fn equivalence_round_trip() {
        let h = edge(3);
        let d = divisor(&h, &[(0, 2)]);
        let fired = chip_fire(&h, &d, 1).unwrap();
        let f = solve_equivalence(&h, &d, &fired).unwrap().unwrap();
        assert_eq!(f[1] - f[0], 1);
        assert_eq!(firing_sequence(&h, &d, &fired).unwrap(), Some(vec![1]));
        assert_eq!(firing_sequence(&h, &d, &d).unwrap(), Some(vec![]));
        let other = divisor(&h, &[(0, 1)]);
        assert_eq!(solve_equivalence(&h, &d, &other).unwrap(), None);
        let moved = divisor(&h, &[(2, 1), (0, 1)]);
        assert_eq!(
            solve_equivalence(&h, &d, &moved).unwrap().map(|f| f[1]),
            Some(-1)
        );
    }
}
