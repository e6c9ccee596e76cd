//! Equal-fidelity surfaces for a qubit target in Bloch space.
//!
//! For a target on the +z axis at Bloch length `lambda` and a fidelity level
//! `F`, the set of states with that fidelity is the oblate ellipsoid
//!
//! ```text
//! (x^2 + y^2) / (F(1-F))  +  (z - (2F-1) lambda)^2 / (F(1-F)(1-4 lambda^2))  =  1,
//! restricted to z <= (2F-1)/(4 lambda).
//! ```
//!
//! The semi-major axis (x, y) is `sqrt(F(1-F))` and the axis ratio is the
//! fixed `sqrt(1 - 4 lambda^2)`, independent of F. The part of the ellipsoid
//! above the cutoff plane is a spurious branch: it solves the same quadratic
//! but with a negative hemisphere component, and the true fidelity there
//! strictly exceeds F. Two degenerations are handled as their own kinds:
//! a maximally mixed target (`lambda = 0`) gives a sphere of radius
//! `sqrt(F(1-F))` with no cutoff, and a pure target (`lambda = 1/2`) gives
//! the full disc `x^2 + y^2 <= F(1-F)` on the plane `z = F - 1/2` (the
//! degenerate ellipse is only that disc's rim).
//!
//! Fidelity can go as low as `1/2 - lambda`, attained only by the antipodal
//! pure state `(0, 0, -1/2)`; below that no state qualifies and construction
//! fails.

use crate::error::{Error, Result};
use crate::random::Rng;
use crate::tol;

/// Shape of the equal-fidelity set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurfaceKind {
    /// Maximally mixed target: sphere centered on the origin.
    Sphere,
    /// Generic target: oblate ellipsoid with the z axis as minor axis.
    Ellipsoid,
    /// Pure target: disc on the plane `z = F - 1/2`.
    PlaneDisc,
}

/// Analytic description of the equal-fidelity set for a qubit target
/// `(0, 0, lambda_t)` at a fidelity level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EqualFidelitySurface {
    lambda_t: f64,
    fidelity_level: f64,
    kind: SurfaceKind,
    center_z: f64,
    semi_major: f64,
    semi_minor: f64,
    cutoff_z: f64,
}

/// A Bloch-space point on (or sampled from) a surface, flagged when it lies
/// on the spurious branch beyond the cutoff plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfacePoint {
    pub bloch: [f64; 3],
    pub spurious: bool,
}

impl EqualFidelitySurface {
    /// Construct the surface for a target Bloch length `lambda_t` in
    /// [0, 1/2] and a fidelity level in `[1/2 - lambda_t, 1]`.
    pub fn new(lambda_t: f64, fidelity_level: f64) -> Result<Self> {
        if !lambda_t.is_finite()
            || !(-tol::DOMAIN_CLAMP..=0.5 + tol::DOMAIN_CLAMP).contains(&lambda_t)
        {
            return Err(Error::Domain(format!(
                "target Bloch length {lambda_t} outside [0, 1/2]"
            )));
        }
        let lambda = lambda_t.clamp(0.0, 0.5);
        let min_fidelity = 0.5 - lambda;
        if !fidelity_level.is_finite()
            || fidelity_level < min_fidelity - tol::DOMAIN_CLAMP
            || fidelity_level > 1.0 + tol::DOMAIN_CLAMP
        {
            return Err(Error::NoSolution {
                lambda_t: lambda,
                fidelity: fidelity_level,
                min_fidelity,
            });
        }
        let f = fidelity_level.clamp(min_fidelity, 1.0);

        let kind = if lambda == 0.0 {
            SurfaceKind::Sphere
        } else if lambda == 0.5 {
            SurfaceKind::PlaneDisc
        } else {
            SurfaceKind::Ellipsoid
        };
        let semi_major = (f * (1.0 - f)).max(0.0).sqrt();
        let axis_ratio = (1.0 - 4.0 * lambda * lambda).max(0.0).sqrt();
        let cutoff_z = if lambda == 0.0 {
            f64::INFINITY
        } else {
            (2.0 * f - 1.0) / (4.0 * lambda)
        };
        Ok(EqualFidelitySurface {
            lambda_t: lambda,
            fidelity_level: f,
            kind,
            center_z: (2.0 * f - 1.0) * lambda,
            semi_major,
            semi_minor: semi_major * axis_ratio,
            cutoff_z,
        })
    }

    pub fn lambda_t(&self) -> f64 {
        self.lambda_t
    }

    pub fn fidelity_level(&self) -> f64 {
        self.fidelity_level
    }

    pub fn kind(&self) -> SurfaceKind {
        self.kind
    }

    pub fn center_z(&self) -> f64 {
        self.center_z
    }

    /// Semi-axis in the x and y directions, `sqrt(F(1-F))`; also the disc
    /// radius for a pure target and the sphere radius for a mixed one.
    pub fn semi_major(&self) -> f64 {
        self.semi_major
    }

    /// Semi-axis in the z direction, `semi_major * sqrt(1 - 4 lambda^2)`.
    pub fn semi_minor(&self) -> f64 {
        self.semi_minor
    }

    /// Spurious-branch boundary `(2F-1)/(4 lambda)`; +inf for a sphere.
    pub fn cutoff_z(&self) -> f64 {
        self.cutoff_z
    }

    /// Lowest attainable fidelity for this target, `1/2 - lambda`.
    pub fn min_fidelity(&self) -> f64 {
        0.5 - self.lambda_t
    }

    fn is_spurious_z(&self, z: f64) -> bool {
        z > self.cutoff_z + tol::CUTOFF_SLACK
    }

    /// Membership test: the point satisfies the surface equation within
    /// `tolerance`, lies below the cutoff, and sits inside the Bloch ball.
    /// For a pure target the test is against the full disc.
    pub fn contains(&self, point: [f64; 3], tolerance: f64) -> bool {
        let [x, y, z] = point;
        let r = (x * x + y * y + z * z).sqrt();
        if r > 0.5 + tolerance {
            return false;
        }
        match self.kind {
            SurfaceKind::PlaneDisc => {
                (z - self.center_z).abs() <= tolerance
                    && x * x + y * y <= self.semi_major * self.semi_major + tolerance
            }
            _ if self.semi_major == 0.0 => {
                // F = 1 degenerates to the target point itself.
                x.abs() <= tolerance
                    && y.abs() <= tolerance
                    && (z - self.center_z).abs() <= tolerance
            }
            _ => {
                if self.is_spurious_z(z) {
                    return false;
                }
                let a2 = self.semi_major * self.semi_major;
                let b2 = self.semi_minor * self.semi_minor;
                let dz = z - self.center_z;
                let residual = (x * x + y * y) / a2 + dz * dz / b2 - 1.0;
                residual.abs() <= tolerance
            }
        }
    }

    fn point_at(&self, polar: f64, azimuth: f64) -> [f64; 3] {
        let sin_u = polar.sin();
        [
            self.semi_major * sin_u * azimuth.cos(),
            self.semi_major * sin_u * azimuth.sin(),
            self.center_z + self.semi_minor * polar.cos(),
        ]
    }

    /// Whether only the bottom point `(0, 0, -1/2)` survives the cutoff,
    /// which happens exactly at the minimum fidelity level.
    fn pinched_to_bottom(&self) -> bool {
        self.kind == SurfaceKind::Ellipsoid
            && self.cutoff_z <= self.center_z - self.semi_minor + tol::CUTOFF_SLACK
    }

    /// Draw `n` seeded points from the surface parameterization (uniform in
    /// the polar and azimuthal parameters, not in surface area). Each point
    /// carries its spurious flag; with `include_spurious = false`, spurious
    /// candidates are rejected and redrawn. Deterministic for fixed inputs.
    pub fn sample_points(&self, n: usize, seed: u64, include_spurious: bool) -> Vec<SurfacePoint> {
        let mut rng = Rng::new(seed);
        let mut points = Vec::with_capacity(n);
        // At the minimum fidelity the genuine set is the single bottom
        // point; rejection sampling would never terminate there.
        if !include_spurious && self.pinched_to_bottom() {
            let bottom = [0.0, 0.0, self.center_z - self.semi_minor];
            points.resize(
                n,
                SurfacePoint {
                    bloch: bottom,
                    spurious: false,
                },
            );
            return points;
        }
        while points.len() < n {
            let polar = std::f64::consts::PI * rng.uniform();
            let azimuth = 2.0 * std::f64::consts::PI * rng.uniform();
            let bloch = self.point_at(polar, azimuth);
            let spurious = self.is_spurious_z(bloch[2]);
            if spurious && !include_spurious {
                continue;
            }
            points.push(SurfacePoint { bloch, spurious });
        }
        points
    }

    /// The y = 0 cross-section as `n` points evenly spaced in the ellipse
    /// parameter, ordered for direct polyline plotting. Spurious-branch
    /// points are flagged, not dropped.
    pub fn cross_section_xz(&self, n: usize) -> Result<Vec<SurfacePoint>> {
        if n < 8 {
            return Err(Error::Domain(format!(
                "cross-section needs at least 8 points (got {n})"
            )));
        }
        let step = 2.0 * std::f64::consts::PI / n as f64;
        Ok((0..n)
            .map(|k| {
                let t = step * k as f64;
                let bloch = [
                    self.semi_major * t.cos(),
                    0.0,
                    self.center_z + self.semi_minor * t.sin(),
                ];
                SurfacePoint {
                    bloch,
                    spurious: self.is_spurious_z(bloch[2]),
                }
            })
            .collect())
    }
}

/// The Bloch vector minimizing fidelity with the target `(0, 0, lambda_t)`,
/// together with that minimum: the antipodal pure state `(0, 0, -1/2)` at
/// fidelity `1/2 - lambda_t`.
pub fn min_fidelity_state(lambda_t: f64) -> Result<([f64; 3], f64)> {
    if !lambda_t.is_finite() || !(-tol::DOMAIN_CLAMP..=0.5 + tol::DOMAIN_CLAMP).contains(&lambda_t)
    {
        return Err(Error::Domain(format!(
            "target Bloch length {lambda_t} outside [0, 1/2]"
        )));
    }
    let lambda = lambda_t.clamp(0.0, 0.5);
    Ok(([0.0, 0.0, -0.5], 0.5 - lambda))
}
