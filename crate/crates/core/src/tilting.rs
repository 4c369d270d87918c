//! Tilting certification, completion and complement fans.

use std::sync::Arc;

use crate::algebra::ReplicatedAlgebra;
use crate::approx::{left_approximation, right_approximation, AddCategory};
use crate::arknit::enumerate_indecomposables;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::homological::{
    ext_all_with, injective_envelope, is_projective, minimal_resolution, pd,
    universal_extension_by, Resolution,
};
use crate::krull::{decompose, find_isomorphism, is_certified_indecomposable, is_indecomposable};
use crate::module::{cokernel, direct_sum, kernel, DirectSum, RMap, RModule, Structural};
use crate::registry::Registry;

/// Basic summand list with cached resolutions.
#[derive(Clone)]
pub struct Pieces<F> {
    alg: Arc<ReplicatedAlgebra>,
    modules: Vec<RModule<F>>,
    resolutions: Vec<Resolution<F>>,
}

impl<F: Field> Pieces<F> {
    pub fn new(alg: &Arc<ReplicatedAlgebra>, modules: Vec<RModule<F>>) -> Result<Self> {
        let resolutions = modules.iter().map(minimal_resolution).collect::<Result<Vec<_>>>()?;
        Ok(Pieces { alg: alg.clone(), modules, resolutions })
    }

    /// The distinct indecomposable summands of M.
    pub fn of_module(m: &RModule<F>) -> Result<Self> {
        let d = decompose(m)?;
        Self::new(m.algebra(), d.pieces.into_iter().map(|p| p.0).collect())
    }

    pub fn algebra(&self) -> &Arc<ReplicatedAlgebra> {
        &self.alg
    }

    pub fn modules(&self) -> &[RModule<F>] {
        &self.modules
    }

    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    pub fn pds(&self) -> Vec<usize> {
        self.resolutions.iter().map(|r| r.len().saturating_sub(1)).collect()
    }

    pub fn pd(&self) -> usize {
        self.pds().into_iter().max().unwrap_or(0)
    }

    pub fn sum(&self) -> RModule<F> {
        if self.modules.is_empty() {
            return RModule::zero(&self.alg);
        }
        DirectSum::new(&self.alg, &self.modules.iter().collect::<Vec<_>>()).module
    }

    pub fn add_category(&self) -> Result<AddCategory<F>> {
        AddCategory::new(&self.alg, self.modules.clone())
    }

    pub fn position(&self, x: &RModule<F>) -> Result<Option<usize>> {
        for (i, p) in self.modules.iter().enumerate() {
            if find_isomorphism(p, x)?.is_some() {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    pub fn contains(&self, x: &RModule<F>) -> Result<bool> {
        Ok(self.position(x)?.is_some())
    }

    /// `Ext^i` vanishes between all pairs, in both orders, for `i >= 1`.
    pub fn is_self_orthogonal(&self) -> bool {
        self.resolutions.iter().all(|r| {
            self.modules.iter().all(|n| ext_all_with(r, n).iter().skip(1).all(|&d| d == 0))
        })
    }

    /// `Ext^i(T, X) = Ext^i(X, T) = Ext^i(X, X) = 0` for `i >= 1`.
    pub fn compatible_with(&self, x: &RModule<F>) -> Result<bool> {
        let rx = minimal_resolution(x)?;
        let vanish = |v: Vec<usize>| v.iter().skip(1).all(|&d| d == 0);
        if !vanish(ext_all_with(&rx, x)) {
            return Ok(false);
        }
        for (p, r) in self.modules.iter().zip(&self.resolutions) {
            if !vanish(ext_all_with(r, x)) || !vanish(ext_all_with(&rx, p)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn with(&self, x: RModule<F>) -> Result<Pieces<F>> {
        let mut out = self.clone();
        out.resolutions.push(minimal_resolution(&x)?);
        out.modules.push(x);
        Ok(out)
    }

    pub fn without(&self, i: usize) -> Pieces<F> {
        let mut out = self.clone();
        out.modules.remove(i);
        out.resolutions.remove(i);
        out
    }
}

/// Number of simple modules, the summand count of a basic tilting module.
pub fn expected_delta(alg: &ReplicatedAlgebra) -> usize {
    alg.vertex_count()
}

pub fn is_partial_tilting<F: Field>(m: &RModule<F>) -> Result<bool> {
    Ok(Pieces::of_module(m)?.is_self_orthogonal())
}

/// Iterated minimal left `add(T)`-approximations of each indecomposable projective.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoresolutionCertificate {
    /// number of `add(T)` terms used per projective, when every step was mono
    pub lengths: Vec<Option<usize>>,
}

impl CoresolutionCertificate {
    pub fn holds(&self) -> bool {
        self.lengths.iter().all(Option::is_some)
    }
}

pub fn coresolution_certificate<F: Field>(t: &Pieces<F>) -> Result<CoresolutionCertificate> {
    let alg = &t.alg;
    let add = t.add_category()?;
    let max_terms = 2 * alg.m() + 2;
    let mut lengths = Vec::new();
    for x in 0..alg.vertex_count() {
        let mut cur = Structural::projective_at::<F>(alg, x);
        let mut terms = 0;
        let outcome = loop {
            if terms == max_terms {
                break None;
            }
            let ap = left_approximation(&cur, &add)?;
            if !ap.map.is_mono() {
                break None;
            }
            terms += 1;
            let (c, _) = cokernel(&ap.target, &ap.map);
            if c.is_zero() {
                break Some(terms);
            }
            cur = c;
        };
        lengths.push(outcome);
    }
    Ok(CoresolutionCertificate { lengths })
}

#[derive(Clone)]
pub struct TiltingReport<F> {
    pub pieces: Pieces<F>,
    pub partial_tilting: bool,
    pub delta: usize,
    pub expected_delta: usize,
    pub delta_verdict: bool,
    /// computed for partial tilting modules
    pub coresolution: Option<CoresolutionCertificate>,
    pub verdict: bool,
}

pub fn check_tilting<F: Field>(m: &RModule<F>) -> Result<TiltingReport<F>> {
    check_tilting_pieces(Pieces::of_module(m)?)
}

/// Computes both certificates; a disagreement is reported as an error.
pub fn check_tilting_pieces<F: Field>(pieces: Pieces<F>) -> Result<TiltingReport<F>> {
    let partial = pieces.is_self_orthogonal();
    let expected = expected_delta(&pieces.alg);
    let delta = pieces.len();
    let delta_verdict = partial && delta == expected;
    let coresolution = if partial { Some(coresolution_certificate(&pieces)?) } else { None };
    if let Some(c) = &coresolution {
        if c.holds() != delta_verdict {
            return Err(Error::TheoremViolation(format!(
                "summand count {delta} of {expected} but coresolution certificate {}",
                c.holds()
            )));
        }
    }
    Ok(TiltingReport {
        pieces,
        partial_tilting: partial,
        delta,
        expected_delta: expected,
        delta_verdict,
        coresolution,
        verdict: delta_verdict,
    })
}

pub fn is_tilting<F: Field>(m: &RModule<F>) -> Result<bool> {
    Ok(check_tilting(m)?.verdict)
}

/// A certified basic tilting module.
#[derive(Clone)]
pub struct TiltingRecord<F> {
    pub module: RModule<F>,
    pub pieces: Pieces<F>,
    pub pds: Vec<usize>,
    pub coresolution: CoresolutionCertificate,
    pub pd_max: usize,
}

impl<F: Field> std::fmt::Debug for TiltingRecord<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.pieces.modules.iter()).finish()
    }
}

impl<F: Field> TiltingRecord<F> {
    pub fn from_pieces(pieces: Pieces<F>) -> Result<Self> {
        let report = check_tilting_pieces(pieces)?;
        if !report.verdict {
            return Err(Error::Precondition(format!(
                "not tilting: {} of {} summands, self-orthogonal {}",
                report.delta, report.expected_delta, report.partial_tilting
            )));
        }
        let pieces = report.pieces;
        let pds = pieces.pds();
        Ok(TiltingRecord {
            module: pieces.sum(),
            pd_max: pds.iter().copied().max().unwrap_or(0),
            pds,
            coresolution: report.coresolution.expect("partial tilting"),
            pieces,
        })
    }

    pub fn from_module(m: &RModule<F>) -> Result<Self> {
        Self::from_pieces(Pieces::of_module(m)?)
    }

    pub fn regular(alg: &Arc<ReplicatedAlgebra>) -> Result<Self> {
        Self::from_pieces(Pieces::new(alg, Structural::projectives::<F>(alg))?)
    }

    pub fn contains_projective_injectives(&self) -> Result<bool> {
        for p in Structural::projective_injectives::<F>(self.module.algebra()) {
            if !self.pieces.contains(&p)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Distinct indecomposable summands of the given modules, first occurrence kept.
fn distinct_pieces<F: Field>(modules: &[RModule<F>]) -> Result<Vec<RModule<F>>> {
    let reg = Registry::new();
    let mut out = Vec::new();
    for m in modules.iter().filter(|m| !m.is_zero()) {
        for (p, _) in decompose(m)?.pieces {
            if reg.intern(&p)?.1 {
                out.push(p);
            }
        }
    }
    Ok(out)
}

/// Completion of a partial tilting module of projective dimension at most
/// one through universal extensions of the projectives by it.
pub fn bongartz_complete<F: Field>(m: &RModule<F>) -> Result<TiltingRecord<F>> {
    let alg = m.algebra();
    if m.is_zero() {
        return TiltingRecord::regular(alg);
    }
    let pieces = Pieces::of_module(m)?;
    if !pieces.is_self_orthogonal() {
        return Err(Error::Precondition("module is not partial tilting".into()));
    }
    if pieces.pd() > 1 {
        return Err(Error::Precondition(format!(
            "projective dimension {} exceeds one",
            pieces.pd()
        )));
    }
    let mut parts: Vec<RModule<F>> = pieces.modules.clone();
    for x in 0..alg.vertex_count() {
        let p = Structural::projective_at::<F>(alg, x);
        parts.push(universal_extension_by(&pieces.modules, &p)?.middle);
    }
    TiltingRecord::from_pieces(Pieces::new(alg, distinct_pieces(&parts)?)?)
}

/// `0 -> left -> middle -> right -> 0` with `middle` in `add(T̄)`.
#[derive(Clone)]
pub struct ExchangeSequence<F> {
    pub left: RModule<F>,
    pub middle: RModule<F>,
    pub right: RModule<F>,
    pub mono: RMap<F>,
    pub epi: RMap<F>,
}

impl<F: Field> ExchangeSequence<F> {
    pub fn is_exact(&self) -> bool {
        self.mono.is_mono()
            && self.epi.is_epi()
            && self.mono.then(&self.epi).is_zero()
            && self.middle.total_dim() == self.left.total_dim() + self.right.total_dim()
    }
}

/// Where the first complement of a fan came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeedSource {
    Caller,
    Projective,
    Bongartz,
    Injective,
    Knitted,
}

#[derive(Clone)]
pub struct ComplementFan<F> {
    pub almost_complete: Pieces<F>,
    /// complements in cosyzygy order with their projective dimensions
    pub complements: Vec<(RModule<F>, usize)>,
    /// `exchanges[i]`: `0 -> X_i -> E -> X_{i+1} -> 0`
    pub exchanges: Vec<ExchangeSequence<F>>,
    pub seed: SeedSource,
}

impl<F: Field> ComplementFan<F> {
    pub fn len(&self) -> usize {
        self.complements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.complements.is_empty()
    }

    pub fn pds(&self) -> Vec<usize> {
        self.complements.iter().map(|c| c.1).collect()
    }
}

/// X is an indecomposable complement of T̄: not in `add T̄` and `T̄ ⊕ X` is
/// self-orthogonal.
pub fn is_complement<F: Field>(t: &Pieces<F>, x: &RModule<F>) -> Result<bool> {
    if x.is_zero() || !is_indecomposable(x)? || t.contains(x)? {
        return Ok(false);
    }
    t.compatible_with(x)
}

fn check_almost_complete<F: Field>(t: &Pieces<F>) -> Result<()> {
    let expected = expected_delta(&t.alg);
    if t.len() + 1 != expected {
        return Err(Error::Precondition(format!(
            "{} distinct summands, an almost complete module has {}",
            t.len(),
            expected - 1
        )));
    }
    if !t.is_self_orthogonal() {
        return Err(Error::Precondition("module is not partial tilting".into()));
    }
    Ok(())
}

/// First complement found by the default search order.
pub fn find_seed<F: Field>(t: &Pieces<F>) -> Result<Option<(RModule<F>, SeedSource)>> {
    let alg = &t.alg;
    for p in Structural::projectives::<F>(alg) {
        if is_complement(t, &p)? {
            return Ok(Some((p, SeedSource::Projective)));
        }
    }
    let low: Vec<RModule<F>> =
        t.modules.iter().zip(t.pds()).filter(|(_, d)| *d <= 1).map(|(m, _)| m.clone()).collect();
    if !low.is_empty() {
        let b = bongartz_complete(&direct_sum(&low.iter().collect::<Vec<_>>())?)?;
        for x in b.pieces.modules() {
            if is_complement(t, x)? {
                return Ok(Some((x.clone(), SeedSource::Bongartz)));
            }
        }
    }
    for i in Structural::injectives::<F>(alg) {
        if is_complement(t, &i)? {
            return Ok(Some((i, SeedSource::Injective)));
        }
    }
    if alg.quiver().is_dynkin() {
        for x in enumerate_indecomposables::<F>(alg)? {
            if is_complement(t, &x)? {
                return Ok(Some((x, SeedSource::Knitted)));
            }
        }
    }
    Ok(None)
}

pub(crate) fn certify_complement<F: Field>(
    t: &Pieces<F>,
    x: &RModule<F>,
    step: &str,
) -> Result<()> {
    if !is_certified_indecomposable(x) && !is_indecomposable(x)? {
        return Err(Error::TheoremViolation(format!(
            "{step} produced a decomposable module {x:?}"
        )));
    }
    if !is_complement(t, x)? {
        return Err(Error::TheoremViolation(format!("{step} produced a non-complement {x:?}")));
    }
    Ok(())
}

/// All complements of a faithful almost complete tilting module, linked by
/// exchange sequences.
pub fn complement_fan<F: Field>(
    t: &Pieces<F>,
    seed: Option<&RModule<F>>,
) -> Result<ComplementFan<F>> {
    check_almost_complete(t)?;
    if !crate::approx::is_faithful(&t.sum())? {
        return Err(Error::Precondition("almost complete module is not faithful".into()));
    }
    let (start, source) = match seed {
        Some(x) => {
            if !is_complement(t, x)? {
                return Err(Error::Seed(format!("{x:?} is not a complement")));
            }
            (x.clone(), SeedSource::Caller)
        }
        None => find_seed(t)?
            .ok_or_else(|| Error::Seed("no complement found by the seed search".into()))?,
    };
    let add = t.add_category()?;
    let limit = 4 * t.alg.m() + 4;
    let mut below: Vec<(RModule<F>, ExchangeSequence<F>)> = Vec::new();
    let mut cur = start.clone();
    loop {
        let ap = right_approximation(&add, &cur)?;
        if !ap.map.is_epi() {
            break;
        }
        let (k, incl) = kernel(&ap.source, &ap.map);
        certify_complement(t, &k, "kernel of a right approximation")?;
        let ex = ExchangeSequence {
            left: k.clone(),
            middle: ap.source,
            right: cur,
            mono: incl,
            epi: ap.map,
        };
        below.push((k.clone(), ex));
        cur = k;
        if below.len() > limit {
            return Err(Error::Internal("complement chain does not terminate".into()));
        }
    }
    let mut above: Vec<(RModule<F>, ExchangeSequence<F>)> = Vec::new();
    let mut cur = start.clone();
    loop {
        let ap = left_approximation(&cur, &add)?;
        if !ap.map.is_mono() {
            break;
        }
        let (c, proj) = cokernel(&ap.target, &ap.map);
        certify_complement(t, &c, "cokernel of a left approximation")?;
        let ex = ExchangeSequence {
            left: cur,
            middle: ap.target,
            right: c.clone(),
            mono: ap.map,
            epi: proj,
        };
        above.push((c.clone(), ex));
        cur = c;
        if above.len() > limit {
            return Err(Error::Internal("complement chain does not terminate".into()));
        }
    }
    let mut chain: Vec<RModule<F>> = below.iter().rev().map(|b| b.0.clone()).collect();
    chain.push(start);
    chain.extend(above.iter().map(|a| a.0.clone()));
    let mut exchanges: Vec<ExchangeSequence<F>> = below.into_iter().rev().map(|b| b.1).collect();
    exchanges.extend(above.into_iter().map(|a| a.1));
    for x in &chain {
        TiltingRecord::from_pieces(t.with(x.clone())?)?;
    }
    let complements =
        chain.into_iter().map(|x| pd(&x).map(|d| (x, d))).collect::<Result<Vec<_>>>()?;
    let fan = ComplementFan { almost_complete: t.clone(), complements, exchanges, seed: source };
    if !t.alg.quiver().is_dynkin() {
        let m = t.alg.m();
        if fan.len() != 2 * m + 1 && fan.len() != 2 * m + 2 {
            return Err(Error::TheoremViolation(format!(
                "{} complements over a representation-infinite base",
                fan.len()
            )));
        }
    }
    Ok(fan)
}

pub fn count_complements<F: Field>(t: &Pieces<F>) -> Result<usize> {
    Ok(complement_fan(t, None)?.len())
}

/// Distribution of projective dimensions over the complements `X_0..X_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FanPattern {
    /// `pd X_i = i` for every i
    Identity,
    /// `pd X_i = i + 1` for `i <= j` and `pd X_i = i` for `i > j`
    Repeat(usize),
}

/// Matches the dimensions of the complements of dimension at most m (in
/// chain order) against the two admissible distributions; `t` is `pd T̄`.
pub fn fan_pattern(pds: &[usize], t: usize) -> Option<FanPattern> {
    if pds.first() == Some(&0) {
        return pds.iter().enumerate().all(|(i, &d)| d == i).then_some(FanPattern::Identity);
    }
    let fits: Vec<usize> = (0..t)
        .filter(|&j| {
            j + 1 < pds.len()
                && pds.iter().enumerate().all(|(i, &d)| if i <= j { d == i + 1 } else { d == i })
        })
        .collect();
    match fits.as_slice() {
        [j] => Some(FanPattern::Repeat(*j)),
        _ => None,
    }
}

/// A tilting module containing the given partial tilting module.
pub fn complete_partial_tilting<F: Field>(m: &RModule<F>) -> Result<TiltingRecord<F>> {
    let alg = m.algebra();
    if m.is_zero() {
        return TiltingRecord::regular(alg);
    }
    let pieces = Pieces::of_module(m)?;
    if !pieces.is_self_orthogonal() {
        return Err(Error::Precondition("module is not partial tilting".into()));
    }
    if pieces.pd() <= 1 {
        return bongartz_complete(m);
    }
    if !alg.quiver().is_dynkin() {
        return Err(Error::StrategyUnavailable(
            "completion beyond projective dimension one needs a Dynkin base".into(),
        ));
    }
    greedy_complete(pieces, &enumerate_indecomposables::<F>(alg)?)
}

/// Adds compatible indecomposables from `candidates` in order.
pub fn greedy_complete<F: Field>(
    mut pieces: Pieces<F>,
    candidates: &[RModule<F>],
) -> Result<TiltingRecord<F>> {
    let expected = expected_delta(&pieces.alg);
    for x in candidates {
        if pieces.len() == expected {
            break;
        }
        if !pieces.contains(x)? && pieces.compatible_with(x)? {
            pieces = pieces.with(x.clone())?;
        }
    }
    if pieces.len() != expected {
        return Err(Error::TheoremViolation(format!(
            "greedy completion stopped at {} of {expected} summands",
            pieces.len()
        )));
    }
    TiltingRecord::from_pieces(pieces)
}

/// Summary of the complement structure of a faithful almost complete
/// tilting module over a duplicated algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DuplicatedReport {
    pub pd_almost_complete: usize,
    pub fan_size: usize,
    pub pds: Vec<usize>,
    /// for the first complement of projective dimension 2
    pub pd2_envelope_projective: Option<bool>,
    pub pd2_complements: usize,
    pub has_pd3_complement: bool,
    /// the non projective-injective part is supported at level 0 and faithful there
    pub level0_part_faithful: Option<bool>,
    /// `(description, holds)` for each cross-check whose hypotheses apply
    pub checks: Vec<(String, bool)>,
}

impl DuplicatedReport {
    pub fn consistent(&self) -> bool {
        self.checks.iter().all(|c| c.1)
    }
}

fn level0_faithful<F: Field>(t: &Pieces<F>) -> Result<Option<bool>> {
    let alg = &t.alg;
    let mut rest = Vec::new();
    for x in &t.modules {
        let pi = is_projective(x) && crate::homological::is_injective(x);
        if !pi {
            rest.push(x.clone());
        }
    }
    if rest.iter().any(|x| x.support_levels().is_some_and(|l| l.1 > 0)) {
        return Ok(None);
    }
    let add = AddCategory::new(alg, rest)?;
    for v in 0..alg.n() {
        let p = Structural::projective::<F>(alg, v, 0)?;
        if !left_approximation(&p, &add)?.map.is_mono() {
            return Ok(Some(false));
        }
    }
    Ok(Some(true))
}

pub fn classify_duplicated<F: Field>(
    t: &Pieces<F>,
    seed: Option<&RModule<F>>,
) -> Result<(DuplicatedReport, ComplementFan<F>)> {
    if t.alg.m() != 1 {
        return Err(Error::Precondition("classification needs a duplicated algebra".into()));
    }
    let fan = complement_fan(t, seed)?;
    let pds = fan.pds();
    let pd_t = t.pd();
    let pd2: Vec<&RModule<F>> = fan.complements.iter().filter(|c| c.1 == 2).map(|c| &c.0).collect();
    let pd2_envelope_projective = pd2.first().map(|x| {
        let (env, _) = injective_envelope(*x);
        is_projective(env.module())
    });
    let has_pd3 = pds.contains(&3);
    let level0 = level0_faithful(t)?;
    let four = fan.len() == 4;
    let mut checks = Vec::new();
    if pd_t <= 1 {
        if let Some(e) = pd2_envelope_projective {
            checks.push((
                "four complements iff the pd-2 complement has a projective injective envelope"
                    .to_string(),
                four == e,
            ));
        }
        if four {
            checks.push((
                "four complements force a faithful level-0 part".to_string(),
                level0 == Some(true),
            ));
        }
    }
    if pd_t <= 2 {
        checks.push(("four complements iff a pd-3 complement exists".to_string(), four == has_pd3));
    }
    if pd_t == 2 && pd2_envelope_projective == Some(true) {
        checks.push(("a projective envelope of a pd-2 complement forces four".to_string(), four));
    }
    let report = DuplicatedReport {
        pd_almost_complete: pd_t,
        fan_size: fan.len(),
        pds,
        pd2_envelope_projective,
        pd2_complements: pd2.len(),
        has_pd3_complement: has_pd3,
        level0_part_faithful: level0,
        checks,
    };
    Ok((report, fan))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::approx::is_faithful;
    use crate::field::Q;
    use crate::hereditary::Quiver;
    use crate::homological::cosyzygy;

    fn alg(q: Quiver, m: usize) -> Arc<ReplicatedAlgebra> {
        Arc::new(ReplicatedAlgebra::new(q, m).unwrap())
    }

    fn a1() -> Arc<ReplicatedAlgebra> {
        alg(Quiver::new(&["1"], &[]).unwrap(), 1)
    }

    fn a2(m: usize) -> Arc<ReplicatedAlgebra> {
        alg(Quiver::new(&["1", "2"], &[("a", "2", "1")]).unwrap(), m)
    }

    #[test]
    fn regular_module_is_tilting() {
        for a in [a1(), a2(1), a2(2)] {
            let r = check_tilting(&Structural::regular_module::<Q>(&a)).unwrap();
            assert!(r.verdict && r.coresolution.unwrap().holds());
            let rec = TiltingRecord::<Q>::regular(&a).unwrap();
            assert_eq!(rec.pd_max, 0);
            assert!(rec.contains_projective_injectives().unwrap());
        }
    }

    #[test]
    fn self_extensions_break_partial_tilting() {
        let a = a2(1);
        let p = Structural::projective::<Q>(&a, 0, 0).unwrap();
        let c = cosyzygy(&p);
        let sum = direct_sum(&[&p, &c]).unwrap();
        assert!(is_partial_tilting(&p).unwrap());
        assert!(!is_partial_tilting(&sum).unwrap());
        assert!(!is_tilting(&p).unwrap());
    }

    #[test]
    fn single_vertex_base_bongartz() {
        let a = a1();
        let s = Structural::simple::<Q>(&a, 0, 1).unwrap();
        let rec = bongartz_complete(&s).unwrap();
        assert_eq!(rec.pieces.len(), 2);
        assert!(rec.pieces.contains(&s).unwrap());
        assert!(rec.pieces.contains(&Structural::projective::<Q>(&a, 0, 1).unwrap()).unwrap());
        let p = Structural::projective::<Q>(&a, 0, 0).unwrap();
        assert_eq!(bongartz_complete(&p).unwrap().pieces.len(), 2);
    }

    #[test]
    fn fans_over_a2() {
        let a = a2(1);
        let ps = Structural::projectives::<Q>(&a);
        // drop P(1,0): the rest is faithful since the projective-injectives are
        let t = Pieces::new(&a, ps[1..].to_vec()).unwrap();
        assert!(is_faithful(&t.sum()).unwrap());
        let fan = complement_fan(&t, None).unwrap();
        assert_eq!(fan.seed, SeedSource::Projective);
        assert!(fan.exchanges.iter().all(ExchangeSequence::is_exact));
        assert_eq!(fan.exchanges.len() + 1, fan.len());
        let low: Vec<usize> = fan.pds().into_iter().filter(|&d| d <= a.m()).collect();
        assert_eq!(low.len(), a.m() + 1);
        assert!(fan_pattern(&low, t.pd()).is_some());
        // the almost complete module without P(2,0) and the seed rejection path
        let bad = Structural::projective::<Q>(&a, 1, 1).unwrap();
        assert!(matches!(complement_fan(&t, Some(&bad)), Err(Error::Seed(_))));
    }

    #[test]
    fn pattern_matching() {
        assert_eq!(fan_pattern(&[0, 1, 2], 2), Some(FanPattern::Identity));
        assert_eq!(fan_pattern(&[1, 1], 1), Some(FanPattern::Repeat(0)));
        assert_eq!(fan_pattern(&[1, 2, 2], 2), Some(FanPattern::Repeat(1)));
        assert_eq!(fan_pattern(&[1, 2, 2], 1), None);
        assert_eq!(fan_pattern(&[0, 2], 1), None);
    }

    #[test]
    fn completion_contains_input() {
        let a = a2(1);
        let s = Structural::simple::<Q>(&a, 1, 1).unwrap();
        let rec = complete_partial_tilting(&s).unwrap();
        assert!(rec.pieces.contains(&s).unwrap());
        assert!(rec.contains_projective_injectives().unwrap());
        let z = RModule::<Q>::zero(&a);
        assert_eq!(complete_partial_tilting(&z).unwrap().pieces.len(), 4);
    }
}
