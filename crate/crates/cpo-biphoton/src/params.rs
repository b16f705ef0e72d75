//! Dimensionless parameter model.
//!
//! Everything runs in units of the transverse relaxation rate: rates and
//! detunings are expressed in multiples of `gamma_perp` (canonically 1),
//! times in its inverse. All observables downstream depend only on ratios,
//! so dimensional prefactors cancel in g2.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Pump drive, given either as a Rabi frequency or as the dimensionless
/// saturation parameter. Exactly one of the two is ever specified; the
/// other is derived.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Pump {
    /// Pump Rabi frequency V0 (in gamma_perp units).
    RabiFrequency(f64),
    /// Saturation parameter kappa = 2 V0^2 / [gamma_ca gamma_perp (1 + Omega^2/gamma_perp^2)].
    Saturation(f64),
}

/// Physical rates, pump drive, and medium thickness.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SystemParams {
    /// Transverse (dipole dephasing) relaxation rate of the optical
    /// transition. Canonical convention fixes this to 1.
    pub gamma_perp: f64,
    /// Longitudinal decay rate, excited -> ground.
    pub gamma_ba: f64,
    /// Longitudinal decay rate, excited -> metastable shelf.
    pub gamma_bc: f64,
    /// Longitudinal decay rate, metastable shelf -> ground. The slow rate
    /// that sets the narrow coherent-oscillation window.
    pub gamma_ca: f64,
    /// Pump drive (Rabi frequency or saturation parameter).
    pub pump: Pump,
    /// Pump detuning from the bare transition, signed.
    pub omega: f64,
    /// Dimensionless optical thickness of the medium.
    pub l_tilde: f64,
}

impl Default for SystemParams {
    /// Canonical working point: kappa = 1, gamma_ca = 1e-4, resonant pump,
    /// optically thin medium, and excited-state decay dominated by shelving.
    fn default() -> Self {
        SystemParams {
            gamma_perp: 1.0,
            gamma_ba: 0.02,
            gamma_bc: 2.0,
            gamma_ca: 1e-4,
            pump: Pump::Saturation(1.0),
            omega: 0.0,
            l_tilde: 1e-3,
        }
    }
}

impl SystemParams {
    pub fn with_kappa(kappa: f64) -> Self {
        SystemParams {
            pump: Pump::Saturation(kappa),
            ..Default::default()
        }
    }

    pub fn with_rabi(v0: f64) -> Self {
        SystemParams {
            pump: Pump::RabiFrequency(v0),
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let rates = [
            ("gamma_perp", self.gamma_perp),
            ("gamma_ba", self.gamma_ba),
            ("gamma_bc", self.gamma_bc),
            ("gamma_ca", self.gamma_ca),
        ];
        for (name, v) in rates {
            if !v.is_finite() || v <= 0.0 {
                return Err(Error::InvalidParams(format!(
                    "{name} must be finite and strictly positive, got {v}"
                )));
            }
        }
        let pump_value = match self.pump {
            Pump::RabiFrequency(v0) => ("pump Rabi frequency", v0),
            Pump::Saturation(kappa) => ("saturation parameter", kappa),
        };
        if !pump_value.1.is_finite() || pump_value.1 < 0.0 {
            return Err(Error::InvalidParams(format!(
                "{} must be finite and non-negative, got {}",
                pump_value.0, pump_value.1
            )));
        }
        if !self.omega.is_finite() {
            return Err(Error::InvalidParams("omega must be finite".into()));
        }
        if !self.l_tilde.is_finite() || self.l_tilde < 0.0 {
            return Err(Error::InvalidParams(format!(
                "l_tilde must be finite and non-negative, got {}",
                self.l_tilde
            )));
        }
        Ok(())
    }
}

/// Quantities derived from [`SystemParams`]: the saturation parameter and
/// Rabi frequency made mutually consistent, the coherent-window width, and
/// the total excited-state decay rate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DerivedParams {
    /// Saturation parameter kappa.
    pub kappa: f64,
    /// Pump Rabi frequency V0 (gamma_perp units).
    pub v0: f64,
    /// Width of the coherent interaction window, W = (1 + kappa) gamma_ca.
    pub w: f64,
    /// Total excited-state decay rate, gamma_ba + gamma_bc.
    pub gamma_b: f64,
}

/// kappa = 2 V0^2 / [gamma_ca gamma_perp (1 + Omega^2/gamma_perp^2)], and
/// its inverse when the saturation parameter is the given quantity.
pub fn derive_params(p: &SystemParams) -> Result<DerivedParams> {
    p.validate()?;
    let lorentz = 1.0 + (p.omega / p.gamma_perp).powi(2);
    let denom = p.gamma_ca * p.gamma_perp * lorentz;
    let (kappa, v0) = match p.pump {
        Pump::RabiFrequency(v0) => (2.0 * v0 * v0 / denom, v0),
        Pump::Saturation(kappa) => (kappa, (kappa * denom / 2.0).sqrt()),
    };
    Ok(DerivedParams {
        kappa,
        v0,
        w: (1.0 + kappa) * p.gamma_ca,
        gamma_b: p.gamma_ba + p.gamma_bc,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_width_at_unit_saturation() {
        let p = SystemParams::with_kappa(1.0);
        let d = derive_params(&p).unwrap();
        assert_eq!(d.w, 2e-4);
    }

    #[test]
    fn kappa_from_rabi_frequency() {
        let p = SystemParams::with_rabi(7.0711e-3);
        let d = derive_params(&p).unwrap();
        assert!((d.kappa - 1.0).abs() < 1e-4, "kappa = {}", d.kappa);
    }

    #[test]
    fn kappa_vanishes_at_large_detuning() {
        let p = SystemParams {
            omega: 1e6,
            ..SystemParams::with_rabi(7.0711e-3)
        };
        let d = derive_params(&p).unwrap();
        assert!(d.kappa < 1e-10);
    }

    #[test]
    fn kappa_monotone_in_pump_and_zero_at_zero() {
        let d0 = derive_params(&SystemParams::with_rabi(0.0)).unwrap();
        assert_eq!(d0.kappa, 0.0);
        let mut last = 0.0;
        for &v0 in &[1e-4, 1e-3, 1e-2, 1e-1] {
            let d = derive_params(&SystemParams::with_rabi(v0)).unwrap();
            assert!(d.kappa > last);
            last = d.kappa;
        }
    }

    #[test]
    fn saturation_round_trip() {
        for &kappa in &[1e-3, 0.3, 1.0, 7.5, 42.0] {
            let p = SystemParams {
                omega: 3.2,
                ..SystemParams::with_kappa(kappa)
            };
            let d = derive_params(&p).unwrap();
            let back = derive_params(&SystemParams {
                pump: Pump::RabiFrequency(d.v0),
                ..p
            })
            .unwrap();
            assert!((back.kappa - kappa).abs() <= 1e-12 * kappa);
        }
    }

    #[test]
    fn window_width_monotone_in_kappa() {
        let mut last = 0.0;
        for &kappa in &[0.0, 0.1, 1.0, 10.0] {
            let d = derive_params(&SystemParams::with_kappa(kappa)).unwrap();
            assert!(d.w > last);
            last = d.w;
        }
        // W -> gamma_ca as kappa -> 0
        let d = derive_params(&SystemParams::with_kappa(1e-14)).unwrap();
        assert!((d.w - 1e-4).abs() < 1e-15);
    }

    #[test]
    fn rejects_nonpositive_rates() {
        for field in 0..4 {
            let mut p = SystemParams::default();
            match field {
                0 => p.gamma_perp = 0.0,
                1 => p.gamma_ba = -1.0,
                2 => p.gamma_bc = 0.0,
                3 => p.gamma_ca = f64::NAN,
                _ => unreachable!(),
            }
            assert!(derive_params(&p).is_err());
        }
    }
}
