use std::cmp::Reverse;
use std::collections::{HashMap, HashSet};

use serde::Serialize;

use super::geometry::{Lozenge, LozengeType, Segment, TriPoint, Triangle};
use super::region::region_from_shape;
use super::{Tiling, TilingError};
use crate::gv::{gv_endpoints, PathFamily};
use crate::paths::{is_admissible, LatticePath, Point, Step};
use crate::shapes::SkewShape;

/// Edge direction along which rhombus paths are chained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Direction {
    /// −π/3: chains of `T2`/`T3` lozenges across sides parallel to `e1 - e2`.
    A,
    /// π/3: chains of `T1`/`T3` lozenges across sides parallel to `e2`.
    B,
    /// −π: chains of `T1`/`T2` lozenges across sides parallel to `e1`.
    C,
}

impl Direction {
    pub fn edge(self) -> TriPoint {
        match self {
            Direction::A => TriPoint::V,
            Direction::B => TriPoint::E2,
            Direction::C => TriPoint::E1,
        }
    }

    // Offsets from a lozenge's entry side to its exit side. A paths run
    // south-west to north-east, B paths west to east, C paths downward.
    fn is_forward(self, offset: TriPoint) -> bool {
        match self {
            Direction::A => offset == TriPoint::E1 || offset == TriPoint::E2,
            Direction::B => offset == TriPoint::E1 || offset == TriPoint::V,
            Direction::C => offset == -TriPoint::E2 || offset == TriPoint::V,
        }
    }

    pub fn members(self) -> [LozengeType; 2] {
        match self {
            Direction::A => [LozengeType::T2, LozengeType::T3],
            Direction::B => [LozengeType::T1, LozengeType::T3],
            Direction::C => [LozengeType::T1, LozengeType::T2],
        }
    }
}

/// Chain of lozenges, each sharing its exit side with the next one's entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RhombusPath {
    pub entry: Segment,
    pub exit: Segment,
    pub lozenges: Vec<Lozenge>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RhombusPathFamily {
    pub direction: Direction,
    /// Ordered top to bottom by entry side.
    pub paths: Vec<RhombusPath>,
}

impl RhombusPathFamily {
    pub fn lozenges(&self) -> impl Iterator<Item = &Lozenge> {
        self.paths.iter().flat_map(|p| p.lozenges.iter())
    }
}

fn top_to_bottom(s: &Segment) -> (Reverse<i64>, Reverse<i64>) {
    let (a2, b2) = (s.p.a + s.q.a, s.p.b + s.q.b);
    (Reverse(b2), Reverse(2 * a2 + b2))
}

/// Splits the lozenges of `tiling` that have sides parallel to `direction`
/// into rhombus paths running between boundary sides of that direction.
pub fn extract_family(tiling: &Tiling, direction: Direction) -> Result<RhombusPathFamily, TilingError> {
    let triangles = tiling.triangles().ok_or_else(|| TilingError::MalformedTiling("overlapping lozenges".into()))?;
    let mut edge_uses: HashMap<Segment, u32> = HashMap::new();
    for t in &triangles {
        for e in t.edges() {
            *edge_uses.entry(e).or_default() += 1;
        }
    }
    let on_boundary = |s: &Segment| edge_uses.get(s) == Some(&1);

    let dir = direction.edge();
    let mut entry_of: HashMap<Segment, usize> = HashMap::new();
    let mut exit_of: HashMap<usize, Segment> = HashMap::new();
    for (i, l) in tiling.lozenges().iter().enumerate() {
        let Some((s0, s1, offset)) = l.parallel_sides(dir) else { continue };
        let (entry, exit) = if direction.is_forward(offset) { (s0, s1) } else { (s1, s0) };
        if entry_of.insert(entry, i).is_some() {
            return Err(TilingError::MalformedTiling(format!("two lozenges enter through {entry:?}")));
        }
        exit_of.insert(i, exit);
    }

    let mut starts: Vec<Segment> = entry_of.keys().filter(|s| on_boundary(s)).copied().collect();
    starts.sort_by_key(top_to_bottom);

    let mut paths = Vec::with_capacity(starts.len());
    let mut visited = 0;
    for entry in starts {
        let mut lozenges = Vec::new();
        let mut side = entry;
        loop {
            let i = *entry_of
                .get(&side)
                .ok_or_else(|| TilingError::MalformedTiling(format!("rhombus path stops at interior side {side:?}")))?;
            lozenges.push(tiling.lozenges()[i]);
            visited += 1;
            side = exit_of[&i];
            if on_boundary(&side) {
                break;
            }
        }
        paths.push(RhombusPath { entry, exit: side, lozenges });
    }
    if visited != entry_of.len() {
        return Err(TilingError::MalformedTiling(format!(
            "{} lozenges are not on a boundary-to-boundary rhombus path",
            entry_of.len() - visited
        )));
    }
    Ok(RhombusPathFamily { direction, paths })
}

fn letters(path: &RhombusPath, east: LozengeType, north: LozengeType) -> Result<Vec<Step>, TilingError> {
    path.lozenges
        .iter()
        .map(|l| match l.kind {
            k if k == east => Ok(Step::E),
            k if k == north => Ok(Step::N),
            k => Err(TilingError::MalformedFamily(format!("unexpected {} lozenge", k.name()))),
        })
        .collect()
}

/// Reads the single −π/3 rhombus path as a lattice path: `T2` is an east
/// step, `T3` a north step. The path starts at the upper end of the side
/// where the rhombus path enters.
pub fn family_a_to_lattice_path(family: &RhombusPathFamily) -> Result<LatticePath, TilingError> {
    if family.direction != Direction::A {
        return Err(TilingError::MalformedFamily("expected a −π/3 family".into()));
    }
    match family.paths.as_slice() {
        [] => Ok(LatticePath::new(Point::ORIGIN, Vec::new())),
        [path] => {
            let start = Point::new(path.entry.p.a, path.entry.p.b);
            Ok(LatticePath::new(start, letters(path, LozengeType::T2, LozengeType::T3)?))
        }
        many => Err(TilingError::MalformedFamily(format!("expected one path, found {}", many.len()))),
    }
}

/// Reads the π/3 rhombus paths as lattice paths on Z²: path `i` (top to
/// bottom) starts at `A_i` of [`gv_endpoints`], with `T1` east and `T3` north.
pub fn family_b_to_z2_paths(family: &RhombusPathFamily, shape: &SkewShape) -> Result<PathFamily, TilingError> {
    if family.direction != Direction::B {
        return Err(TilingError::MalformedFamily("expected a π/3 family".into()));
    }
    let config = gv_endpoints(shape);
    if family.paths.len() != config.len() {
        return Err(TilingError::MalformedFamily(format!(
            "expected {} paths, found {}",
            config.len(),
            family.paths.len()
        )));
    }
    let paths = family
        .paths
        .iter()
        .zip(&config.starts)
        .map(|(p, &start)| Ok(LatticePath::new(start, letters(p, LozengeType::T1, LozengeType::T3)?)))
        .collect::<Result<_, TilingError>>()?;
    Ok(PathFamily { paths })
}

/// The tiling whose −π/3 rhombus path traces `path`: east steps become `T2`
/// lozenges, north steps `T3`, and the rest of the region is covered by
/// sheared cells (`T1`).
pub fn lattice_path_to_tiling(shape: &SkewShape, path: &LatticePath) -> Result<Tiling, TilingError> {
    let not_admissible = || TilingError::NotAdmissible { path: path.to_string(), shape: shape.to_string() };
    if !is_admissible(shape, path).map_err(|_| not_admissible())? {
        return Err(not_admissible());
    }
    let region = region_from_shape(shape);
    let mut lozenges = Vec::with_capacity(shape.m() + shape.width() + shape.n());
    let mut covered: HashSet<Triangle> = HashSet::new();
    let mut p = TriPoint::ORIGIN;
    for step in path.steps() {
        let l = match step {
            Step::E => Lozenge::new(LozengeType::T2, p.a + 1, p.b - 1),
            Step::N => Lozenge::new(LozengeType::T3, p.a, p.b),
        };
        for t in l.triangles() {
            if !region.triangles().contains(&t) || !covered.insert(t) {
                return Err(TilingError::MalformedTiling(format!("rhombus path leaves the region at {t:?}")));
            }
        }
        lozenges.push(l);
        p = p + match step {
            Step::E => TriPoint::E1,
            Step::N => TriPoint::E2,
        };
    }
    for &t in region.triangles() {
        if covered.contains(&t) || t.orient != super::Orientation::Up {
            continue;
        }
        let partner = Triangle::down(t.a, t.b);
        if region.triangles().contains(&partner) && !covered.contains(&partner) {
            covered.insert(t);
            covered.insert(partner);
            lozenges.push(Lozenge::new(LozengeType::T1, t.a, t.b));
        }
    }
    if let Some(&t) = region.triangles().iter().find(|t| !covered.contains(t)) {
        return Err(TilingError::ComplementNotPairable(t));
    }
    Ok(Tiling::new(lozenges))
}

/// Number of lozenges of types `(T1, T2, T3)`.
pub fn tiling_type_census(tiling: &Tiling) -> (usize, usize, usize) {
    tiling.lozenges().iter().fold((0, 0, 0), |(t1, t2, t3), l| match l.kind {
        LozengeType::T1 => (t1 + 1, t2, t3),
        LozengeType::T2 => (t1, t2 + 1, t3),
        LozengeType::T3 => (t1, t2, t3 + 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gv::enumerate_disjoint_families;
    use crate::paths::enumerate_paths;
    use crate::shapes::parse_shape;
    use crate::tilings::enumerate_tilings;

    fn shape(text: &str) -> SkewShape {
        parse_shape(text).unwrap()
    }

    fn tilings(s: &SkewShape) -> Vec<Tiling> {
        enumerate_tilings(&region_from_shape(s), 10_000).unwrap()
    }

    fn kinds(path: &RhombusPath) -> Vec<LozengeType> {
        let mut k: Vec<_> = path.lozenges.iter().map(|l| l.kind).collect();
        k.sort();
        k
    }

    #[test]
    fn hexagon_families() {
        let s = shape("1");
        let ts = tilings(&s);
        let words: Vec<String> = ts
            .iter()
            .map(|t| family_a_to_lattice_path(&extract_family(t, Direction::A).unwrap()).unwrap().to_string())
            .collect();
        assert_eq!(words, ["EN", "NE"]);
        for t in &ts {
            let a = extract_family(t, Direction::A).unwrap();
            assert_eq!(a.paths.len(), 1);
            assert_eq!(kinds(&a.paths[0]), [LozengeType::T2, LozengeType::T3]);
            let b = extract_family(t, Direction::B).unwrap();
            assert_eq!(b.paths.len(), 1);
            assert_eq!(kinds(&b.paths[0]), [LozengeType::T1, LozengeType::T3]);
            let z2 = family_b_to_z2_paths(&b, &s).unwrap();
            assert_eq!(z2.paths[0].start(), Point::new(-1, 1));
            assert_eq!(z2.paths[0].end(), Point::new(0, 2));
            assert_eq!(tiling_type_census(t), (1, 1, 1));
        }
    }

    #[test]
    fn figure_shape_has_four_b_paths() {
        let s = shape("9,7,6,2/3,1");
        let path: LatticePath = "NEENEENEEEEEN".parse().unwrap();
        assert!(is_admissible(&s, &path).unwrap());
        let t = lattice_path_to_tiling(&s, &path).unwrap();
        assert!(t.is_tiling_of(&region_from_shape(&s)));
        assert_eq!(extract_family(&t, Direction::B).unwrap().paths.len(), 4);
        assert_eq!(tiling_type_census(&t), (20, 9, 4));
    }

    #[test]
    fn path_to_tiling_round_trip() {
        let s = shape("1");
        let t = lattice_path_to_tiling(&s, &"EN".parse().unwrap()).unwrap();
        assert_eq!(t.len(), 3);
        let back = family_a_to_lattice_path(&extract_family(&t, Direction::A).unwrap()).unwrap();
        assert_eq!(back.to_string(), "EN");
        let empty = lattice_path_to_tiling(&shape(""), &"".parse().unwrap()).unwrap();
        assert!(empty.is_empty());
    }

    #[test]
    fn path_to_tiling_rejects_inadmissible() {
        let s = shape("2,1");
        assert!(matches!(lattice_path_to_tiling(&s, &"EENN".parse().unwrap()), Err(TilingError::NotAdmissible { .. })));
        assert!(matches!(lattice_path_to_tiling(&s, &"EN".parse().unwrap()), Err(TilingError::NotAdmissible { .. })));
    }

    #[test]
    fn staircase_bijections() {
        let s = shape("2,1");
        let mut images: Vec<Tiling> =
            enumerate_paths(&s, 100).unwrap().iter().map(|p| lattice_path_to_tiling(&s, p).unwrap()).collect();
        images.sort();
        let mut all = tilings(&s);
        all.sort();
        assert_eq!(images, all);

        let mut b_images: Vec<PathFamily> =
            all.iter().map(|t| family_b_to_z2_paths(&extract_family(t, Direction::B).unwrap(), &s).unwrap()).collect();
        b_images.sort();
        let mut families = enumerate_disjoint_families(&gv_endpoints(&s), 100).unwrap();
        families.sort();
        assert_eq!(b_images, families);
    }

    #[test]
    fn b_path_lengths_and_c_partition() {
        for s in SkewShape::all_in_box(3, 3) {
            for t in tilings(&s) {
                let b = extract_family(&t, Direction::B).unwrap();
                assert_eq!(b.paths.len(), s.n());
                for (i, p) in b.paths.iter().enumerate() {
                    let (mu, lambda) = s.row_bounds(i);
                    assert_eq!(p.lozenges.len(), lambda - mu + 1, "{s}");
                }
                let c = extract_family(&t, Direction::C).unwrap();
                let mut in_c: Vec<Lozenge> = c.lozenges().copied().collect();
                in_c.sort();
                let expected: Vec<Lozenge> =
                    t.lozenges().iter().filter(|l| l.kind != LozengeType::T3).copied().collect();
                assert_eq!(in_c, expected, "{s}");
                assert_eq!(c.paths.len(), s.width());
            }
        }
    }

    #[test]
    fn wrong_direction_is_rejected() {
        let t = &tilings(&shape("1"))[0];
        let b = extract_family(t, Direction::B).unwrap();
        assert!(matches!(family_a_to_lattice_path(&b), Err(TilingError::MalformedFamily(_))));
        let a = extract_family(t, Direction::A).unwrap();
        assert!(matches!(family_b_to_z2_paths(&a, &shape("1")), Err(TilingError::MalformedFamily(_))));
    }

    #[test]
    fn overlapping_lozenges_are_rejected() {
        let t = Tiling::new(vec![Lozenge::new(LozengeType::T1, 0, 0), Lozenge::new(LozengeType::T2, 0, 0)]);
        assert!(matches!(extract_family(&t, Direction::A), Err(TilingError::MalformedTiling(_))));
    }

    #[test]
    fn census_of_empty_tiling() {
        assert_eq!(tiling_type_census(&Tiling::default()), (0, 0, 0));
    }
}
