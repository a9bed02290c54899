//! Figure presets: named point sets with a fixed generating command.

use std::path::{Path, PathBuf};

use anyhow::Result;
use coxplane_core::projection::project_parallel;
use coxplane_core::quasilattice::{golden_radius, slab_project, window_from_voronoi, StripConfig, StripLattice};
use coxplane_core::weyl::{orbit, voronoi_vertices, LatticeKind};
use coxplane_core::{Basis, Diagram, LatticeVector, PointSet2D};

use crate::config::Config;
use crate::emit::{to_csv, to_svg, write_file};
use crate::strip::strip_project_parallel;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, clap::ValueEnum)]
pub enum Preset {
    Fig7a,
    Fig7b,
    Fig8a,
    Fig8b,
    Fig10,
    Fig11,
    Fig12,
    Fig13,
    Fig15,
    Fig16,
    Fig17a,
    Fig17b,
}

/// Squared E∥ radius of the strip figures, `(2/5)τ¹⁰`.
const STRIP_PAR_POWER: u32 = 10;

enum Recipe {
    Orbit([i64; 4]),
    Voronoi(LatticeKind),
    Strip(StripLattice),
    Slab(u32, u32),
}

impl Preset {
    pub const ALL: [Preset; 12] = [
        Preset::Fig7a,
        Preset::Fig7b,
        Preset::Fig8a,
        Preset::Fig8b,
        Preset::Fig10,
        Preset::Fig11,
        Preset::Fig12,
        Preset::Fig13,
        Preset::Fig15,
        Preset::Fig16,
        Preset::Fig17a,
        Preset::Fig17b,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Fig7a => "fig7a",
            Preset::Fig7b => "fig7b",
            Preset::Fig8a => "fig8a",
            Preset::Fig8b => "fig8b",
            Preset::Fig10 => "fig10",
            Preset::Fig11 => "fig11",
            Preset::Fig12 => "fig12",
            Preset::Fig13 => "fig13",
            Preset::Fig15 => "fig15",
            Preset::Fig16 => "fig16",
            Preset::Fig17a => "fig17a",
            Preset::Fig17b => "fig17b",
        }
    }

    pub fn caption(self) -> &'static str {
        match self {
            Preset::Fig7a => "projected 5-cell (1,0,0,0)",
            Preset::Fig7b => "projected 5-cell (0,0,0,1)",
            Preset::Fig8a => "projected polytope (0,0,1,0)",
            Preset::Fig8b => "projected polytope (0,1,0,0)",
            Preset::Fig10 => "root system of A4 projected onto the Coxeter plane",
            Preset::Fig11 => "projected Voronoi cell of the root lattice",
            Preset::Fig12 => "projected polytope (1,1,1,1)",
            Preset::Fig13 => "projected polytope (0,1,1,0)",
            Preset::Fig15 => "strip projection of the root lattice",
            Preset::Fig16 => "strip projection of the weight lattice",
            Preset::Fig17a => "slab |a_i| <= 2, |sum a_i| <= 2",
            Preset::Fig17b => "slab |a_i| <= 3, |sum a_i| <= 3",
        }
    }

    fn recipe(self) -> Recipe {
        match self {
            Preset::Fig7a => Recipe::Orbit([1, 0, 0, 0]),
            Preset::Fig7b => Recipe::Orbit([0, 0, 0, 1]),
            Preset::Fig8a => Recipe::Orbit([0, 0, 1, 0]),
            Preset::Fig8b => Recipe::Orbit([0, 1, 0, 0]),
            Preset::Fig10 => Recipe::Orbit([1, 0, 0, 1]),
            Preset::Fig11 => Recipe::Voronoi(LatticeKind::A4Root),
            Preset::Fig12 => Recipe::Orbit([1, 1, 1, 1]),
            Preset::Fig13 => Recipe::Orbit([0, 1, 1, 0]),
            Preset::Fig15 => Recipe::Strip(StripLattice::Root),
            Preset::Fig16 => Recipe::Strip(StripLattice::Weight),
            Preset::Fig17a => Recipe::Slab(2, 2),
            Preset::Fig17b => Recipe::Slab(3, 3),
        }
    }

    /// The equivalent command line.
    pub fn command(self) -> String {
        let join = |a: &[i64; 4]| a.map(|x| x.to_string()).join(",");
        match self.recipe() {
            Recipe::Orbit(w) => format!("orbit --diagram A4 --weight {} --basis weight --project par", join(&w)),
            Recipe::Voronoi(_) => "orbit --voronoi a4-root --project par".into(),
            Recipe::Strip(l) => {
                let r = golden_radius(STRIP_PAR_POWER);
                format!("strip --lattice {} --window {}-voronoi --par-r2 {},{}", l.name(), l.name(), r.a(), r.b())
            }
            Recipe::Slab(a, s) => format!("slab --amax {a} --smax {s}"),
        }
    }

    pub fn build(self, threads: usize, max_box: u128) -> Result<PointSet2D> {
        let project = |vs: Vec<LatticeVector>| -> Result<Vec<_>> {
            vs.iter().map(|v| project_parallel(v).map_err(Into::into)).collect()
        };
        let mut set = match self.recipe() {
            Recipe::Orbit(w) => {
                let hw = LatticeVector::from_ints(Diagram::A4, Basis::Weight, &w)?;
                PointSet2D::new(project(orbit(&hw)?)?, vec![])
            }
            Recipe::Voronoi(kind) => PointSet2D::new(project(voronoi_vertices(kind))?, vec![]),
            Recipe::Strip(lattice) => {
                let cfg = StripConfig::new(lattice, window_from_voronoi(lattice), golden_radius(STRIP_PAR_POWER))?
                    .with_max_box(max_box);
                let mut s = strip_project_parallel(&cfg, threads)?;
                s.metadata.clear();
                s
            }
            Recipe::Slab(a, s) => {
                let mut set = slab_project(a, s);
                set.metadata.clear();
                set
            }
        };
        let n = set.len();
        set.metadata = vec![
            ("figure".into(), self.name().into()),
            ("caption".into(), self.caption().into()),
            ("command".into(), self.command()),
            ("count".into(), n.to_string()),
        ];
        Ok(set)
    }

    /// Writes `<name>.csv` and `<name>.svg` into `dir`.
    pub fn run(self, dir: &Path, config: &Config, threads: usize) -> Result<Vec<PathBuf>> {
        let set = self.build(threads, config.limits.max_box.into())?;
        let csv = dir.join(format!("{}.csv", self.name()));
        let svg = dir.join(format!("{}.svg", self.name()));
        write_file(&csv, &to_csv(&set))?;
        write_file(&svg, &to_svg(&set, &config.svg))?;
        Ok(vec![csv, svg])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use coxplane_core::GoldenRational;

    fn build(p: Preset) -> PointSet2D {
        p.build(1, u128::MAX).unwrap()
    }

    #[test]
    fn pentagon() {
        let set = build(Preset::Fig7a);
        assert_eq!(set.len(), 5);
        let r = GoldenRational::from_fractions(2, 5, 0, 1);
        assert!(set.points.iter().all(|p| p.norm_squared() == r));
    }

    #[test]
    fn point_counts() {
        let expected = [
            (Preset::Fig7b, 5),
            (Preset::Fig8a, 10),
            (Preset::Fig8b, 10),
            (Preset::Fig10, 20),
            (Preset::Fig11, 30),
            (Preset::Fig12, 120),
            (Preset::Fig13, 30),
            (Preset::Fig17a, 381),
            (Preset::Fig17b, 1451),
        ];
        for (p, n) in expected {
            assert_eq!(build(p).len(), n, "{}", p.name());
        }
    }

    #[test]
    fn root_system_on_two_decagons() {
        let hist = build(Preset::Fig10).radius_histogram();
        let unit = GoldenRational::from_fractions(2, 5, 0, 1);
        let radii: Vec<_> = hist.iter().map(|(r, n)| (r.clone(), *n)).collect();
        assert_eq!(
            radii,
            vec![(&unit * &GoldenRational::from_ints(3, -1), 10), (&unit * &GoldenRational::from_ints(2, 1), 10)]
        );
    }

    #[test]
    fn voronoi_on_three_circles() {
        let hist = build(Preset::Fig11).radius_histogram();
        assert_eq!(hist.iter().map(|(_, n)| *n).collect::<Vec<_>>(), vec![10, 10, 10]);
    }

    #[test]
    fn strip_figures_have_decagonal_symmetry_counts() {
        for p in [Preset::Fig15, Preset::Fig16] {
            let set = build(p);
            assert_eq!(set.collisions, 0);
            assert_eq!((set.len() - 1) % 5, 0, "{}", p.name());
        }
    }

    #[test]
    fn names_are_unique() {
        let mut names: Vec<&str> = Preset::ALL.iter().map(|p| p.name()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), Preset::ALL.len());
    }
}
