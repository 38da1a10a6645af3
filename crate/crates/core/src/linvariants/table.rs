use serde::{Deserialize, Serialize};

use super::regulators::{log_conjugate, log_v0_unit};
use super::LinvError;
use crate::fields::{BiquadConfig, GaloisElement};
use crate::padic::Padic;

/// An integer or a p-adic number in a unit table.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TableValue {
    Int(i64),
    Padic(Padic),
}

impl TableValue {
    fn to_padic(&self, p: u64, prec: u32) -> Padic {
        match self {
            TableValue::Int(n) => Padic::from_i64(p, *n, prec),
            TableValue::Padic(x) => x.clone(),
        }
    }

    fn precision(&self) -> Option<i64> {
        match self {
            TableValue::Int(_) => None,
            TableValue::Padic(x) => Some(x.abs_prec()),
        }
    }
}

/// Logarithms of the conjugates of `y0` (and optionally of a unit fixing the slope) over a
/// cyclic group `C = {g_0 = 1, g_1, ...}`, with the values of `psi_-` on `C`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct UnitTable {
    pub p: u64,
    pub psi: Vec<TableValue>,
    /// `log_p(g_i^-1 y0)`.
    pub log_y0: Vec<TableValue>,
    /// `log_p(tau g_i^-1 y0)`.
    pub log_tau_y0: Vec<TableValue>,
    pub ord_y0: TableValue,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub slope: Option<TableValue>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub log_unit: Option<Vec<TableValue>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub log_tau_unit: Option<Vec<TableValue>>,
}

impl UnitTable {
    fn entries(&self) -> impl Iterator<Item = &TableValue> {
        let rows = [Some(&self.psi), Some(&self.log_y0), Some(&self.log_tau_y0), self.log_unit.as_ref(), self.log_tau_unit.as_ref()];
        rows.into_iter().flatten().flatten().chain(std::iter::once(&self.ord_y0)).chain(self.slope.iter())
    }
}

/// `sum_i psi(g_i) x_i`.
fn twisted_sum(psi: &[Padic], row: &[TableValue], p: u64, prec: u32) -> Padic {
    psi.iter().zip(row).fold(Padic::zero(p, prec as i64), |acc, (c, x)| acc.add(&c.mul(&x.to_padic(p, prec))))
}

/// `-(sum psi(g) log(g^-1 y0) + S sum psi(g) log(tau g^-1 y0)) / ord(y0)`.
pub fn general_regulator(table: &UnitTable) -> Result<Padic, LinvError> {
    let n = table.psi.len();
    if n == 0 {
        return Err(LinvError::IncompleteTable("no character values".into()));
    }
    for (name, len) in [("logY0", table.log_y0.len()), ("logTauY0", table.log_tau_y0.len())] {
        if len != n {
            return Err(LinvError::IncompleteTable(format!("{name} has {len} entries, expected {n}")));
        }
    }
    let p = table.p;
    let prec = table.entries().filter_map(TableValue::precision).min().unwrap_or(40).max(1) as u32;
    let work = prec + 8;
    let psi: Vec<Padic> = table.psi.iter().map(|x| x.to_padic(p, work)).collect();

    let slope = match (&table.slope, &table.log_unit, &table.log_tau_unit) {
        (Some(s), _, _) => s.to_padic(p, work),
        (None, Some(u), Some(tu)) => {
            if u.len() != n || tu.len() != n {
                return Err(LinvError::IncompleteTable("unit rows do not match the group order".into()));
            }
            let den = twisted_sum(&psi, tu, p, work);
            if den.is_zero() {
                return Err(LinvError::DenominatorVanishesToPrecision);
            }
            twisted_sum(&psi, u, p, work).div(&den)?.neg()
        }
        _ => return Err(LinvError::IncompleteTable("neither a slope nor unit rows".into())),
    };
    let direct = twisted_sum(&psi, &table.log_y0, p, work);
    let conj = twisted_sum(&psi, &table.log_tau_y0, p, work);
    let ord = table.ord_y0.to_padic(p, work);
    Ok(direct.add(&slope.mul(&conj)).div(&ord)?.neg())
}

/// The table for `C = Gal(H/K) = {1, g}` and quadratic `psi_-`, built from the v0-unit of
/// the configuration, with the slope left to be recomputed from `eps_F`.
pub fn quadratic_table(config: &BiquadConfig) -> Result<UnitTable, LinvError> {
    use GaloisElement::{GTau, Identity, Tau, G};
    let eps = config.field.from_f(&config.eps_f);
    let v = |x: Padic| TableValue::Padic(x);
    Ok(UnitTable {
        p: config.p,
        psi: vec![TableValue::Int(1), TableValue::Int(-1)],
        log_y0: vec![v(log_v0_unit(config, Identity)?), v(log_v0_unit(config, G)?)],
        log_tau_y0: vec![v(log_v0_unit(config, Tau)?), v(log_v0_unit(config, GTau)?)],
        ord_y0: v(Padic::from_rational(config.p, &config.v0_unit_order(), config.prec + 8)),
        slope: None,
        log_unit: Some(vec![v(log_conjugate(config, Identity, &eps)?), v(log_conjugate(config, G, &eps)?)]),
        log_tau_unit: Some(vec![v(log_conjugate(config, Tau, &eps)?), v(log_conjugate(config, GTau, &eps)?)]),
    })
}
