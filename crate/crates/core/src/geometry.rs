//! Similarly sized β-fat objects (balls and axis-aligned boxes) in ℝ^d, their
//! intersection graphs, a seeded instance generator and BFS growth tables.
//!
//! Lengths are in units where the inscribed ball has radius 1. Objects are
//! closed: tangent objects intersect.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Generated coordinates and sizes are multiples of this grid step (2⁻²⁰).
pub const GRID_STEP: f64 = 1.0 / (1u64 << 20) as f64;

#[derive(Clone, Debug, PartialEq)]
pub enum FatObject {
    Ball { center: Vec<f64>, radius: f64 },
    Box { center: Vec<f64>, half_extents: Vec<f64> },
}

impl FatObject {
    pub fn center(&self) -> &[f64] {
        match self {
            FatObject::Ball { center, .. } | FatObject::Box { center, .. } => center,
        }
    }

    pub fn dimension(&self) -> usize {
        self.center().len()
    }
}

/// Whether a unit ball fits inside `obj` and `obj` fits inside a ball of
/// radius `beta`.
pub fn validate_fatness(obj: &FatObject, beta: f64, d: usize) -> Result<bool> {
    if d == 0 || !(beta >= 1.0) {
        return Err(Error::input("fatness needs d >= 1 and beta >= 1"));
    }
    if obj.dimension() != d {
        return Err(Error::input(alloc::format!(
            "object has {} coordinates, expected {d}",
            obj.dimension()
        )));
    }
    if obj.center().iter().any(|c| !c.is_finite()) {
        return Ok(false);
    }
    Ok(match obj {
        FatObject::Ball { radius, .. } => *radius >= 1.0 && *radius <= beta,
        FatObject::Box { half_extents, .. } => {
            if half_extents.len() != d {
                return Err(Error::input("half-extent count differs from dimension"));
            }
            // inradius is the smallest half-extent, circumradius the half-diagonal
            let circum_sq: f64 = half_extents.iter().map(|h| h * h).sum();
            half_extents.iter().all(|&h| h >= 1.0) && circum_sq <= beta * beta
        }
    })
}

/// Closed-set intersection test.
pub fn intersects(a: &FatObject, b: &FatObject) -> bool {
    use FatObject::*;
    match (a, b) {
        (Ball { center: c1, radius: r1 }, Ball { center: c2, radius: r2 }) => {
            let d2: f64 = c1.iter().zip(c2).map(|(x, y)| (x - y) * (x - y)).sum();
            let r = r1 + r2;
            d2 <= r * r
        }
        (Box { center: c1, half_extents: h1 }, Box { center: c2, half_extents: h2 }) => c1
            .iter()
            .zip(c2)
            .zip(h1.iter().zip(h2))
            .all(|((x, y), (p, q))| (x - y).abs() <= p + q),
        (Ball { center: cb, radius }, Box { center: cx, half_extents })
        | (Box { center: cx, half_extents }, Ball { center: cb, radius }) => {
            box_point_dist_sq(cx, half_extents, cb) <= radius * radius
        }
    }
}

fn box_point_dist_sq(center: &[f64], half: &[f64], p: &[f64]) -> f64 {
    center
        .iter()
        .zip(half)
        .zip(p)
        .map(|((c, h), x)| {
            let gap = ((x - c).abs() - h).max(0.0);
            gap * gap
        })
        .sum()
}

/// Euclidean distance between two closed objects (0 when they intersect).
pub fn object_distance(a: &FatObject, b: &FatObject) -> f64 {
    use FatObject::*;
    match (a, b) {
        (Ball { center: c1, radius: r1 }, Ball { center: c2, radius: r2 }) => {
            let d2: f64 = c1.iter().zip(c2).map(|(x, y)| (x - y) * (x - y)).sum();
            (libm::sqrt(d2) - r1 - r2).max(0.0)
        }
        (Box { center: c1, half_extents: h1 }, Box { center: c2, half_extents: h2 }) => {
            let d2: f64 = c1
                .iter()
                .zip(c2)
                .zip(h1.iter().zip(h2))
                .map(|((x, y), (p, q))| {
                    let gap = ((x - y).abs() - p - q).max(0.0);
                    gap * gap
                })
                .sum();
            libm::sqrt(d2)
        }
        (Ball { center: cb, radius }, Box { center: cx, half_extents })
        | (Box { center: cx, half_extents }, Ball { center: cb, radius }) => {
            (libm::sqrt(box_point_dist_sq(cx, half_extents, cb)) - radius).max(0.0)
        }
    }
}

/// A family of similarly sized fat objects. Object `i` is vertex `i` of the
/// derived graph.
#[derive(Clone, Debug, PartialEq)]
pub struct GeometricInstance {
    pub dimension: usize,
    pub beta: f64,
    pub objects: Vec<FatObject>,
    pub seed: u64,
}

impl GeometricInstance {
    pub fn validate(&self) -> Result<()> {
        for (i, obj) in self.objects.iter().enumerate() {
            if !validate_fatness(obj, self.beta, self.dimension)? {
                return Err(Error::input(alloc::format!("object {i} is not {}-fat", self.beta)));
            }
        }
        Ok(())
    }
}

/// The intersection graph of a valid instance.
pub fn intersection_graph(inst: &GeometricInstance) -> Result<Graph> {
    inst.validate()?;
    let objs = &inst.objects;
    let mut edges = Vec::new();
    for i in 0..objs.len() {
        for j in i + 1..objs.len() {
            if intersects(&objs[i], &objs[j]) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(objs.len(), &edges)
}

fn snap_down(x: f64) -> f64 {
    libm::floor(x / GRID_STEP) * GRID_STEP
}

/// Seeded random instance: `n` objects with centers uniform in
/// `[0, box_side]^d`, a fraction `shape_mix` of balls (radius uniform in
/// `[1, beta]`) and boxes otherwise (half-extents uniform in
/// `[1, beta / sqrt(d)]`, so the half-diagonal stays within `beta`). When
/// `beta < sqrt(d)` no box is fat enough and a ball is emitted instead. All
/// values are snapped down to the 2⁻²⁰ grid.
pub fn generate_instance(
    d: usize,
    beta: f64,
    n: usize,
    box_side: f64,
    shape_mix: f64,
    seed: u64,
) -> Result<GeometricInstance> {
    if d == 0 || !(beta >= 1.0) || !(box_side >= 0.0) || !(0.0..=1.0).contains(&shape_mix) {
        return Err(Error::input("generator needs d >= 1, beta >= 1, side >= 0, mix in [0, 1]"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let box_max = beta / libm::sqrt(d as f64);
    let mut objects = Vec::with_capacity(n);
    for _ in 0..n {
        let center: Vec<f64> = (0..d).map(|_| snap_down(rng.gen::<f64>() * box_side)).collect();
        let want_ball = rng.gen::<f64>() < shape_mix;
        if want_ball || box_max < 1.0 {
            let radius = snap_down(1.0 + rng.gen::<f64>() * (beta - 1.0)).max(1.0);
            objects.push(FatObject::Ball { center, radius });
        } else {
            let mut half: Vec<f64> =
                (0..d).map(|_| snap_down(1.0 + rng.gen::<f64>() * (box_max - 1.0)).max(1.0)).collect();
            while half.iter().map(|h| h * h).sum::<f64>() > beta * beta {
                let i = (0..d).max_by(|&a, &b| half[a].total_cmp(&half[b])).unwrap_or(0);
                half[i] = (half[i] - GRID_STEP).max(1.0);
            }
            objects.push(FatObject::Box { center, half_extents: half });
        }
    }
    let inst = GeometricInstance { dimension: d, beta, objects, seed };
    inst.validate()?;
    Ok(inst)
}

/// For each `r` in `1..=r_max`, the largest BFS ball `|B(v, r)|` over all `v`.
pub fn empirical_growth(g: &Graph, r_max: usize) -> Vec<(usize, usize)> {
    let mut best = alloc::vec![0usize; r_max + 1];
    for v in 0..g.n() {
        let dist = g.bfs_distances_within(v, None, r_max.saturating_sub(1));
        let mut counts = alloc::vec![0usize; r_max + 1];
        for &dv in &dist {
            if dv < r_max {
                counts[dv + 1] += 1;
            }
        }
        let mut acc = 0;
        for r in 1..=r_max {
            acc += counts[r];
            best[r] = best[r].max(acc);
        }
    }
    (1..=r_max).map(|r| (r, best[r])).collect()
}

/// Least-squares fit of `size = c * r^e` in log space; returns `(c, e)`.
pub fn fit_power_law(table: &[(usize, usize)]) -> (f64, f64) {
    let pts: Vec<(f64, f64)> = table
        .iter()
        .filter(|&&(r, s)| r > 0 && s > 0)
        .map(|&(r, s)| (libm::log(r as f64), libm::log(s as f64)))
        .collect();
    let k = pts.len() as f64;
    if pts.len() < 2 {
        return (pts.first().map_or(0.0, |p| libm::exp(p.1)), 0.0);
    }
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    let e = sxy / sxx;
    (libm::exp(my - e * mx), e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::path;

    fn ball(c: &[f64], r: f64) -> FatObject {
        FatObject::Ball { center: c.to_vec(), radius: r }
    }

    #[test]
    fn fatness_examples() {
        assert!(validate_fatness(&ball(&[0.0, 0.0], 1.0), 1.0, 2).unwrap());
        assert!(!validate_fatness(&ball(&[0.0, 0.0], 3.0), 2.0, 2).unwrap());
        let unit_box = FatObject::Box { center: alloc::vec![0.0, 0.0], half_extents: alloc::vec![1.0, 1.0] };
        assert!(validate_fatness(&unit_box, 1.5, 2).unwrap());
        assert!(!validate_fatness(&unit_box, 1.4, 2).unwrap());
        assert!(validate_fatness(&ball(&[0.0], 1.0), 1.0, 2).is_err());
    }

    #[test]
    fn tangent_balls_intersect() {
        let inst = GeometricInstance {
            dimension: 2,
            beta: 1.0,
            objects: alloc::vec![ball(&[0.0, 0.0], 1.0), ball(&[2.0, 0.0], 1.0)],
            seed: 0,
        };
        assert_eq!(intersection_graph(&inst).unwrap().m(), 1);
        let single = GeometricInstance { objects: alloc::vec![ball(&[0.0, 0.0], 1.0)], ..inst };
        let g = intersection_graph(&single).unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
    }

    #[test]
    fn mixed_predicates() {
        let b = FatObject::Box { center: alloc::vec![0.0, 0.0], half_extents: alloc::vec![1.0, 1.0] };
        // corner (1,1) to ball center (2,2) has distance sqrt(2)
        assert!(intersects(&b, &ball(&[2.0, 2.0], 1.5)));
        assert!(!intersects(&b, &ball(&[2.0, 2.0], 1.4)));
        let b2 = FatObject::Box { center: alloc::vec![2.0, 0.5], half_extents: alloc::vec![1.0, 1.0] };
        assert!(intersects(&b, &b2));
        assert_eq!(object_distance(&b, &b2), 0.0);
        assert!((object_distance(&ball(&[0.0, 0.0], 1.0), &ball(&[5.0, 0.0], 1.0)) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn generator_unit_disk_and_determinism() {
        let one = generate_instance(2, 1.0, 1, 10.0, 1.0, 7).unwrap();
        assert_eq!(one.objects.len(), 1);
        assert!(matches!(one.objects[0], FatObject::Ball { radius, .. } if radius == 1.0));
        let a = generate_instance(3, 2.0, 40, 15.0, 0.5, 11).unwrap();
        let b = generate_instance(3, 2.0, 40, 15.0, 0.5, 11).unwrap();
        assert_eq!(a, b);
        for o in &a.objects {
            for &c in o.center() {
                assert_eq!(c, snap_down(c));
            }
        }
    }

    #[test]
    fn growth_of_small_graphs() {
        assert_eq!(empirical_growth(&Graph::empty(1), 3), [(1, 1), (2, 1), (3, 1)]);
        assert_eq!(empirical_growth(&path(5), 4), [(1, 1), (2, 3), (3, 5), (4, 5)]);
    }

    #[test]
    fn power_law_fit_recovers_exponent() {
        let table: Vec<_> = (1..=8).map(|r| (r, 3 * r * r)).collect();
        let (c, e) = fit_power_law(&table);
        assert!((e - 2.0).abs() < 1e-9 && (c - 3.0).abs() < 1e-9);
    }
}
