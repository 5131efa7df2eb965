//! The multiplication machinery: the kernel/image modules of the
//! distinguished maps to and from the translate, the Ext-minimal middle
//! module M over a possibly extended algebra, the Grassmannian/F-polynomial
//! decomposition identity, the cluster-character identity and the
//! exchange-relation criterion.

use crate::algebra::GentleAlgebra;
use crate::ar::{tau, tau_inv, tau_sum};
use crate::error::{DomainError, Error};
use crate::homext::{ext_basis, is_rigid, ExtClass, ExtKind, XSide};
use crate::invariants::{cluster_character, f_polynomial, g_vector};
use crate::modules::{dim_vector, Module, ModuleSum, StringModule};
use crate::poly::{LaurentCC, YPolynomial};
use crate::strings::{subword, Band, Letter, StringWord};

/// Everything the multiplication theorem produces for a pair (X, S) with
/// one-dimensional Ext^1(S, X).
#[derive(Debug, Clone)]
pub struct MultiplicationData {
    pub x: ModuleSum,
    pub s: ModuleSum,
    pub xi: ExtClass,
    /// Middle term Y of the generating extension.
    pub y: ModuleSum,
    pub xbar: ModuleSum,
    pub sunder: StringModule,
    pub s_mod_sunder: ModuleSum,
    /// The Ext-minimum extension between S/S_under and Xbar.
    pub m: ModuleSum,
    /// Host algebra of M: the original algebra or an extension by the
    /// added arrows below.
    pub host: GentleAlgebra,
    /// (name, source, target) of arrows added to the original algebra.
    pub added_arrows: Vec<(String, usize, usize)>,
    /// dim Ext^1(S_under, X/Xbar) over the original algebra.
    pub ext_su_xmod: usize,
    /// Rigidity of M, checked when the host is gentle.
    pub m_rigid: Option<bool>,
}

/// One admissible overlap between a factor-side source and an image-side
/// target, in fixed coordinates of both words. `flip` marks matches against
/// the inverse reading of the overlap.
#[derive(Debug, Clone, Copy)]
struct OverlapCand {
    len: usize,
    src_range: (usize, usize),
    tgt_range: (usize, usize),
    flip: bool,
}

#[derive(Clone, Copy)]
enum SourceSide<'a> {
    Word(&'a StringWord),
    Band(&'a Band),
}

/// All admissible overlaps: factor cuts of the source against image cuts of
/// the target, matched up to inversion of the overlap word.
fn overlap_candidates(
    alg: &GentleAlgebra,
    src: SourceSide,
    tgt: &StringWord,
) -> Vec<OverlapCand> {
    let subs = crate::strings::sub_decompositions(alg, tgt);
    let mut out = Vec::new();
    match src {
        SourceSide::Word(w) => {
            for f in crate::strings::fac_decompositions(alg, w) {
                for s in &subs {
                    if !crate::strings::words_match(alg, &f.mid, &s.mid) {
                        continue;
                    }
                    let len = f.mid.len();
                    let flip = len > 0 && f.mid != s.mid;
                    out.push(OverlapCand { len, src_range: f.cut, tgt_range: s.cut, flip });
                }
            }
        }
        SourceSide::Band(b) => {
            let n = b.len();
            for s in &subs {
                let len = s.mid.len();
                if len > n - 2 {
                    continue;
                }
                for start in 0..n {
                    if b.letter_before(start).direct
                        || !b.letter_after((start + len) % n).direct
                    {
                        continue;
                    }
                    if len == 0 {
                        let vtx = match &s.mid {
                            StringWord::Trivial { vertex, .. } => *vertex,
                            _ => unreachable!(),
                        };
                        if b.node_vertex(alg, start) != vtx {
                            continue;
                        }
                        out.push(OverlapCand {
                            len,
                            src_range: (start, start),
                            tgt_range: s.cut,
                            flip: false,
                        });
                    } else {
                        let slice: Vec<Letter> =
                            (0..len).map(|i| b.letters()[(start + i) % n]).collect();
                        let sw = StringWord::Word(slice);
                        if !crate::strings::words_match(alg, &sw, &s.mid) {
                            continue;
                        }
                        let flip = sw != s.mid;
                        out.push(OverlapCand {
                            len,
                            src_range: (start, start + len),
                            tgt_range: s.cut,
                            flip,
                        });
                    }
                }
            }
        }
    }
    out
}

/// Explicit module map of an overlap candidate: the composition of the
/// factor epimorphism and the image monomorphism, on the node bases of the
/// fixed orientations.
fn candidate_map(
    alg: &GentleAlgebra,
    src: SourceSide,
    src_rep: &crate::rep::Representation,
    tgt: &StringWord,
    tgt_rep: &crate::rep::Representation,
    cand: &OverlapCand,
) -> Vec<crate::linalg::Matrix> {
    use num_traits::One;
    let src_diag = match src {
        SourceSide::Word(w) => crate::modules::diagram_of_word(alg, w),
        SourceSide::Band(b) => crate::modules::diagram_of_band(alg, b),
    };
    let tgt_diag = crate::modules::diagram_of_word(alg, tgt);
    let src_coords = crate::rep::node_coordinates(alg, &src_diag);
    let tgt_coords = crate::rep::node_coordinates(alg, &tgt_diag);
    let nv = alg.vertex_count();
    let mut blocks: Vec<crate::linalg::Matrix> = (0..nv)
        .map(|i| crate::linalg::Matrix::zeros(tgt_rep.dims[i], src_rep.dims[i]))
        .collect();
    let n_src = src_coords.len();
    for k in 0..=cand.len {
        let sp = match src {
            SourceSide::Word(_) => cand.src_range.0 + k,
            SourceSide::Band(_) => (cand.src_range.0 + k) % n_src.max(1),
        };
        let tp = if cand.flip { cand.tgt_range.1 - k } else { cand.tgt_range.0 + k };
        let (vs, os) = src_coords[sp];
        let (vt, ot) = tgt_coords[tp];
        debug_assert_eq!(vs, vt, "overlap nodes must share the vertex");
        blocks[vs][(ot, os)] = crate::linalg::Q::one();
    }
    blocks
}

/// Select the distinguished overlap: among the candidates whose relevant
/// range contains the gluing site, the longest whose map does not factor
/// through a projective (image side) or injective (kernel side).
fn select_stable_overlap(
    alg: &GentleAlgebra,
    src: SourceSide,
    tgt: &StringWord,
    site_on_src: Option<(usize, usize)>,
    site_on_tgt: Option<(usize, usize)>,
    injective_side: bool,
) -> Result<OverlapCand, Error> {
    let mut cands = overlap_candidates(alg, src, tgt);
    if let Some(site) = site_on_tgt {
        cands.retain(|c| c.tgt_range.0 <= site.0 && site.1 <= c.tgt_range.1);
    }
    if let Some(site) = site_on_src {
        match src {
            SourceSide::Word(_) => {
                cands.retain(|c| c.src_range.0 <= site.0 && site.1 <= c.src_range.1)
            }
            SourceSide::Band(b) => {
                let n = b.len();
                cands.retain(|c| {
                    let off = (site.0 + n - (c.src_range.0 % n)) % n;
                    off + (site.1 - site.0) <= c.src_range.1 - c.src_range.0
                });
            }
        }
    }
    if cands.is_empty() {
        return Err(DomainError::Other("no overlap contains the gluing site".into()).into());
    }
    cands.sort_by(|a, b| b.len.cmp(&a.len));
    let src_rep = match src {
        SourceSide::Word(w) => crate::rep::rep_of_word(alg, w),
        SourceSide::Band(b) => crate::rep::rep_of_band(alg, b),
    };
    let tgt_rep = crate::rep::rep_of_word(alg, tgt);
    let mut chosen: Option<OverlapCand> = None;
    for cand in &cands {
        if let Some(c) = &chosen {
            if cand.len < c.len {
                break;
            }
            // another stable candidate of the same length must describe the
            // same kernel/image data
            let h = candidate_map(alg, src, &src_rep, tgt, &tgt_rep, cand);
            let stable = if injective_side {
                !crate::rep::factors_through_injective(alg, &src_rep, &tgt_rep, &h)
            } else {
                !crate::rep::factors_through_projective(alg, &src_rep, &tgt_rep, &h)
            };
            if stable
                && ((injective_side && cand.src_range != c.src_range)
                    || (!injective_side && cand.tgt_range != c.tgt_range))
            {
                return Err(DomainError::Other(
                    "ambiguous stable maximal overlap".into(),
                )
                .into());
            }
            continue;
        }
        let h = candidate_map(alg, src, &src_rep, tgt, &tgt_rep, cand);
        let stable = if injective_side {
            !crate::rep::factors_through_injective(alg, &src_rep, &tgt_rep, &h)
        } else {
            !crate::rep::factors_through_projective(alg, &src_rep, &tgt_rep, &h)
        };
        if stable {
            chosen = Some(*cand);
        }
    }
    chosen.ok_or_else(|| {
        DomainError::Other("no overlap survives the stability test".into()).into()
    })
}

/// Flank words of a string outside a node interval.
fn flank_words(
    alg: &GentleAlgebra,
    w: &StringWord,
    range: (usize, usize),
) -> (StringWord, StringWord) {
    crate::modules::flanks(alg, w, range.0, range.1)
}

fn word_letters_reversed(w: &StringWord) -> Vec<Letter> {
    w.letters().iter().rev().map(|c| c.invert()).collect()
}

/// Splice two pieces with a connecting arrow t(left) -> t(right_piece):
/// left . arrow . right^-1.
fn splice_word(left: &StringWord, arrow: usize, right: &StringWord) -> StringWord {
    let mut l: Vec<Letter> = w_letters(left);
    l.push(Letter::direct(arrow));
    l.extend(word_letters_reversed(right));
    StringWord::Word(l)
}

fn w_letters(w: &StringWord) -> Vec<Letter> {
    w.letters().to_vec()
}

/// Find an existing arrow src -> tgt over `alg` such that the candidate
/// word is a valid string; otherwise None.
fn existing_arrow_for(
    alg: &GentleAlgebra,
    src: usize,
    tgt: usize,
    build: impl Fn(usize) -> StringWord,
) -> Option<(usize, StringWord)> {
    for a in 0..alg.quiver().arrow_count() {
        if alg.quiver().source(a) == src && alg.quiver().target(a) == tgt {
            let w = build(a);
            if crate::strings::is_valid(alg, &w) {
                return Some((a, w));
            }
        }
    }
    None
}

/// Compute the full multiplication data for a pair with [S, X]^1 = 1.
pub fn multiplication_data(
    alg: &GentleAlgebra,
    x: &ModuleSum,
    s: &ModuleSum,
) -> Result<MultiplicationData, Error> {
    let basis = ext_basis(alg, s, x)?;
    if basis.len() != 1 {
        return Err(DomainError::ExtDimension { found: basis.len() }.into());
    }
    let xi = basis.into_iter().next().unwrap();
    let y = xi.middle.clone();
    let xw = &x.summands()[xi.x_index];
    let sw = &s.summands()[xi.s_index];
    if matches!(sw, Module::Band(_)) {
        return Err(DomainError::Unsupported("band quotient module S".into()).into());
    }
    // v_sc: the S-side orientation the extension was found in
    let v_sc = xi.v_scanned.clone();
    let s_len = v_sc.len();
    // gluing sites of the extension inside the scanned words: the overlap
    // range, or for an arrow extension the end of w and the start of v
    let (w_site, v_site) = match &xi.kind {
        ExtKind::Overlap(o) => (o.w_range, o.v_range),
        ExtKind::Arrow { .. } => {
            let wl = match &xi.w_scanned {
                XSide::Word(w) => w.len(),
                XSide::Band(b) => b.len(),
            };
            ((wl, wl), (0, 0))
        }
    };

    // Image module S_under: maximal overlap from tau^{-1}(X) into S.
    let tinv_x = tau_inv(alg, xw);
    let (r2, t2) = match &xi.w_scanned {
        XSide::Word(_) => {
            let tw = match &tinv_x {
                Module::String(m) => {
                    if m.is_zero() {
                        return Err(DomainError::Other(
                            "X is injective although Ext is nonzero".into(),
                        )
                        .into());
                    }
                    m.word().clone()
                }
                _ => unreachable!("translate of a string is a string"),
            };
            select_stable_overlap(
                alg,
                SourceSide::Word(&tw),
                &v_sc,
                None,
                Some(v_site),
                false,
            )?
            .tgt_range
        }
        XSide::Band(b) => select_stable_overlap(
            alg,
            SourceSide::Band(b),
            &v_sc,
            None,
            Some(v_site),
            false,
        )?
        .tgt_range,
    };
    let sunder_word = subword(alg, &v_sc, r2, t2);
    let sunder = StringModule::new(alg, &sunder_word)?;
    let (beta_l, beta_r) = flank_words(alg, &v_sc, (r2, t2));
    let mut s_mod_sunder_parts = vec![
        Module::string(alg, &beta_l)?,
        Module::string(alg, &beta_r)?,
    ];
    for (k, other) in s.summands().iter().enumerate() {
        if k != xi.s_index {
            s_mod_sunder_parts.push(other.clone());
        }
    }
    let s_mod_sunder = ModuleSum::new(s_mod_sunder_parts);

    // Kernel module Xbar and the middle M, split by the shape of X.
    let the_data = match &xi.w_scanned {
        XSide::Word(w_sc) => {
            // maximal overlap from X into tau(S)
            let ts = tau(alg, sw);
            let ts_word = match &ts {
                Module::String(m) => {
                    if m.is_zero() {
                        return Err(DomainError::Other(
                            "S is projective although Ext is nonzero".into(),
                        )
                        .into());
                    }
                    m.word().clone()
                }
                _ => unreachable!(),
            };
            let (r1, t1) = select_stable_overlap(
                alg,
                SourceSide::Word(w_sc),
                &ts_word,
                Some(w_site),
                None,
                true,
            )?
            .src_range;
            let (alpha_l, alpha_r) = flank_words(alg, w_sc, (r1, t1));
            let x_mod_xbar = subword(alg, w_sc, r1, t1);
            string_case(
                alg,
                &xi,
                w_sc,
                &v_sc,
                (r1, t1),
                (r2, t2),
                &alpha_l,
                &alpha_r,
                &beta_l,
                &beta_r,
                &x_mod_xbar,
                s_len,
            )?
        }
        XSide::Band(band) => {
            let ts = tau(alg, sw);
            let ts_word = match &ts {
                Module::String(m) => {
                    if m.is_zero() {
                        return Err(DomainError::Other(
                            "S is projective although Ext is nonzero".into(),
                        )
                        .into());
                    }
                    m.word().clone()
                }
                _ => unreachable!(),
            };
            band_case(alg, &xi, band, &v_sc, (r2, t2), &beta_l, &beta_r, &ts_word, w_site)?
        }
    };
    let (xbar_core, m_core, host, added_arrows, ext_su_xmod) = the_data;

    // Reassemble untouched summands.
    let mut xbar_parts = xbar_core.summands().to_vec();
    for (k, other) in x.summands().iter().enumerate() {
        if k != xi.x_index {
            xbar_parts.push(other.clone());
        }
    }
    let xbar = ModuleSum::new(xbar_parts);
    let mut m_parts = m_core.summands().to_vec();
    for (k, other) in x.summands().iter().enumerate() {
        if k != xi.x_index {
            m_parts.push(other.clone());
        }
    }
    for (k, other) in s.summands().iter().enumerate() {
        if k != xi.s_index {
            m_parts.push(other.clone());
        }
    }
    let m = ModuleSum::new(m_parts);

    let m_rigid = if host.gentle && added_arrows.is_empty() {
        Some(is_rigid(&host, &m)?)
    } else if host.gentle {
        // rigid over the extended gentle host; recompute there
        Some(is_rigid(&host, &m)?)
    } else {
        None
    };

    Ok(MultiplicationData {
        x: x.clone(),
        s: s.clone(),
        xi,
        y,
        xbar,
        sunder,
        s_mod_sunder,
        m,
        host,
        added_arrows,
        ext_su_xmod,
        m_rigid,
    })
}

type CaseData = (ModuleSum, ModuleSum, GentleAlgebra, Vec<(String, usize, usize)>, usize);

#[allow(clippy::too_many_arguments)]
fn string_case(
    alg: &GentleAlgebra,
    xi: &ExtClass,
    w_sc: &StringWord,
    v_sc: &StringWord,
    xbar_range: (usize, usize),
    sunder_range: (usize, usize),
    alpha_l: &StringWord,
    alpha_r: &StringWord,
    beta_l: &StringWord,
    beta_r: &StringWord,
    x_mod_xbar: &StringWord,
    s_len: usize,
) -> Result<CaseData, Error> {
    let xbar = ModuleSum::new(vec![
        Module::string(alg, alpha_l)?,
        Module::string(alg, alpha_r)?,
    ]);
    let w_len = w_sc.len();
    let (p, q, pp, qq) = match &xi.kind {
        ExtKind::Overlap(o) => (o.w_range.0, o.w_range.1, o.v_range.0, o.v_range.1),
        ExtKind::Arrow { .. } => {
            // arrow extensions always keep M = Xbar + S/S_under
            let ext_su = ext_count(alg, &sunder_range_module(alg, v_sc, sunder_range)?, x_mod_xbar)?;
            let m = xbar.plus(&ModuleSum::new(vec![
                Module::string(alg, beta_l)?,
                Module::string(alg, beta_r)?,
            ]));
            return Ok((xbar, m, alg.clone(), Vec::new(), ext_su));
        }
    };
    let sunder_mod = sunder_range_module(alg, v_sc, sunder_range)?;
    let ext_su = ext_count(alg, &sunder_mod, x_mod_xbar)?;

    // The flank conditions of the proof decide the shape of M. (On loop-free
    // algebras they are equivalent to the vanishing of Ext^1(S_under, X/Xbar),
    // which is reported alongside; a loop can create extra extensions of the
    // residual pair without affecting the subquiver decomposition.)
    let cond1 = p == xbar_range.0 && pp == sunder_range.0;
    let cond2 = q == xbar_range.1 && qq == sunder_range.1;
    if !(cond1 || cond2) {
        let m = xbar.plus(&ModuleSum::new(vec![
            Module::string(alg, beta_l)?,
            Module::string(alg, beta_r)?,
        ]));
        return Ok((xbar, m, alg.clone(), Vec::new(), ext_su));
    }

    let mut host = alg.clone();
    let mut added: Vec<(String, usize, usize)> = Vec::new();
    let mut m_parts: Vec<Module> = Vec::new();

    // left side
    if cond1 {
        let w_l = if p == 0 { StringWord::Zero } else { subword(alg, w_sc, 0, p - 1) };
        let v_l = if pp == 0 { StringWord::Zero } else { subword(alg, v_sc, 0, pp - 1) };
        match (w_l.is_zero(), v_l.is_zero()) {
            (true, true) => {}
            (true, false) => m_parts.push(Module::string(alg, &v_l)?),
            (false, true) => m_parts.push(Module::string(alg, &w_l)?),
            (false, false) => {
                let src = w_l.target(alg).unwrap();
                let tgt = v_l.target(alg).unwrap();
                if let Some((a, word)) =
                    existing_arrow_for(alg, src, tgt, |a| splice_word(&w_l, a, &v_l))
                {
                    let _ = a;
                    m_parts.push(Module::string(alg, &word)?);
                } else {
                    host = host.extend(&[("@L".into(), src, tgt)]);
                    let a = host.quiver().arrow_id("@L").unwrap();
                    let word = splice_word(&w_l, a, &v_l);
                    added.push(("@L".into(), src, tgt));
                    m_parts.push(Module::string(&host, &word)?);
                }
            }
        }
    } else {
        m_parts.push(Module::string(alg, alpha_l)?);
        m_parts.push(Module::string(alg, beta_l)?);
    }

    // right side
    if cond2 {
        let w_r = if q >= w_len { StringWord::Zero } else { subword(alg, w_sc, q + 1, w_len) };
        let v_r = if qq >= s_len { StringWord::Zero } else { subword(alg, v_sc, qq + 1, s_len) };
        match (w_r.is_zero(), v_r.is_zero()) {
            (true, true) => {}
            (true, false) => m_parts.push(Module::string(alg, &v_r)?),
            (false, true) => m_parts.push(Module::string(alg, &w_r)?),
            (false, false) => {
                let src = w_r.source(alg).unwrap();
                let tgt = v_r.source(alg).unwrap();
                // word: w_r^-1 . arrow . v_r
                let build = |a: usize| {
                    let mut l = word_letters_reversed(&w_r);
                    l.push(Letter::direct(a));
                    l.extend(w_letters(&v_r));
                    StringWord::Word(l)
                };
                if let Some((_, word)) = existing_arrow_for(&host, src, tgt, build) {
                    m_parts.push(Module::string(&host, &word)?);
                } else {
                    host = host.extend(&[("@R".into(), src, tgt)]);
                    let a = host.quiver().arrow_id("@R").unwrap();
                    let word = build(a);
                    added.push(("@R".into(), src, tgt));
                    m_parts.push(Module::string(&host, &word)?);
                }
            }
        }
    } else {
        m_parts.push(Module::string(alg, alpha_r)?);
        m_parts.push(Module::string(alg, beta_r)?);
    }

    Ok((xbar, ModuleSum::new(m_parts), host, added, ext_su))
}

fn band_case(
    alg: &GentleAlgebra,
    xi: &ExtClass,
    band: &Band,
    v_sc: &StringWord,
    sunder_range: (usize, usize),
    beta_l: &StringWord,
    beta_r: &StringWord,
    ts_word: &StringWord,
    w_site: (usize, usize),
) -> Result<CaseData, Error> {
    let o = match &xi.kind {
        ExtKind::Overlap(o) => o,
        ExtKind::Arrow { .. } => {
            return Err(DomainError::Unsupported("arrow extension with a band".into()).into())
        }
    };
    let n = band.len();
    let (p, q) = o.w_range;
    // kernel of the distinguished map to the translate: complement of the
    // maximal overlap
    let (r, t_end) = select_stable_overlap(
        alg,
        SourceSide::Band(band),
        ts_word,
        Some(w_site),
        None,
        true,
    )?
    .src_range;
    let max_len = t_end - r;
    let xbar_letters = n - max_len - 2;
    let xbar_word = if xbar_letters == 0 {
        StringWord::trivial(band.node_vertex(alg, (t_end + 1) % n), 1)
    } else {
        StringWord::Word(
            (0..xbar_letters)
                .map(|k| band.letters()[(t_end + 1 + k) % n])
                .collect(),
        )
    };
    let xbar = ModuleSum::from_module(Module::string(alg, &xbar_word)?);
    // X/Xbar = the maximal-overlap part of the band
    let x_mod_xbar = if max_len == 0 {
        StringWord::trivial(band.node_vertex(alg, r % n), 1)
    } else {
        StringWord::Word((0..max_len).map(|k| band.letters()[(r + k) % n]).collect())
    };
    let sunder_mod = sunder_range_module(alg, v_sc, sunder_range)?;
    let ext_su = ext_count(alg, &sunder_mod, &x_mod_xbar)?;
    let cond1 = p % n == r % n && o.v_range.0 == sunder_range.0;
    let cond2 = q % n == t_end % n && o.v_range.1 == sunder_range.1;
    if !(cond1 || cond2) {
        let m = xbar.plus(&ModuleSum::new(vec![
            Module::string(alg, beta_l)?,
            Module::string(alg, beta_r)?,
        ]));
        return Ok((xbar, m, alg.clone(), Vec::new(), ext_su));
    }
    let s_len = v_sc.len();
    let v_l = if o.v_range.0 == 0 {
        StringWord::Zero
    } else {
        subword(alg, v_sc, 0, o.v_range.0 - 1)
    };
    let v_r = if o.v_range.1 >= s_len {
        StringWord::Zero
    } else {
        subword(alg, v_sc, o.v_range.1 + 1, s_len)
    };

    let mut host = alg.clone();
    let mut added: Vec<(String, usize, usize)> = Vec::new();
    let mut glued = xbar_word.clone();
    let mut extra: Vec<Module> = Vec::new();

    if cond1 && !v_l.is_zero() {
        let src = glued.target(&host).unwrap();
        let tgt = v_l.target(alg).unwrap();
        let base = glued.clone();
        let build = |a: usize| splice_word(&base, a, &v_l);
        if let Some((_, word)) = existing_arrow_for(&host, src, tgt, build) {
            glued = word;
        } else {
            host = host.extend(&[("@L".into(), src, tgt)]);
            let a = host.quiver().arrow_id("@L").unwrap();
            glued = splice_word(&base, a, &v_l);
            added.push(("@L".into(), src, tgt));
        }
    } else if !cond1 {
        extra.push(Module::string(alg, beta_l)?);
    }
    if cond2 && !v_r.is_zero() {
        let src = glued.source(&host).unwrap();
        let tgt = v_r.source(alg).unwrap();
        let base = glued.clone();
        let build = |a: usize| {
            // v_r^-1 . a^-1 . glued read backwards: equivalently
            // glued^-1 . a . v_r reversed; build directly:
            let mut l = word_letters_reversed(&v_r);
            // after v_r^-1 we sit at s(v_r) = tgt; a^-1 goes tgt -> src
            l.push(Letter::inverse(a));
            l.extend(w_letters(&base));
            StringWord::Word(l)
        };
        if let Some((_, word)) = existing_arrow_for(&host, src, tgt, build) {
            glued = word;
        } else {
            host = host.extend(&[("@R".into(), src, tgt)]);
            let a = host.quiver().arrow_id("@R").unwrap();
            glued = build(a);
            added.push(("@R".into(), src, tgt));
        }
    } else if !cond2 {
        extra.push(Module::string(alg, beta_r)?);
    }

    let mut parts = vec![Module::string(&host, &glued)?];
    parts.extend(extra);
    Ok((xbar, ModuleSum::new(parts), host, added, ext_su))
}

fn sunder_range_module(
    alg: &GentleAlgebra,
    v_sc: &StringWord,
    range: (usize, usize),
) -> Result<ModuleSum, Error> {
    let w = subword(alg, v_sc, range.0, range.1);
    Ok(ModuleSum::from_module(Module::string(alg, &w)?))
}

fn ext_count(alg: &GentleAlgebra, s: &ModuleSum, x_word: &StringWord) -> Result<usize, Error> {
    let x = ModuleSum::from_module(Module::string(alg, x_word)?);
    Ok(ext_basis(alg, s, &x)?.len())
}

// ---------------------------------------------------------------------------
// Spec-level operations

/// Kernel of the distinguished map X -> tau(S).
pub fn xbar(alg: &GentleAlgebra, x: &ModuleSum, s: &ModuleSum) -> Result<ModuleSum, Error> {
    Ok(multiplication_data(alg, x, s)?.xbar)
}

/// Image of the distinguished map tau^{-1}(X) -> S.
pub fn sunder(alg: &GentleAlgebra, x: &ModuleSum, s: &ModuleSum) -> Result<StringModule, Error> {
    Ok(multiplication_data(alg, x, s)?.sunder)
}

/// The Ext-minimum extension between S/S_under and Xbar, with its host
/// algebra and any added arrows.
pub fn minimum_extension(
    alg: &GentleAlgebra,
    x: &ModuleSum,
    s: &ModuleSum,
) -> Result<(ModuleSum, GentleAlgebra, Vec<(String, usize, usize)>), Error> {
    let data = multiplication_data(alg, x, s)?;
    Ok((data.m, data.host, data.added_arrows))
}

/// The generating extension: the unique basis element, or the split report.
pub enum GeneratingExtension {
    Split { y: ModuleSum },
    Class(Box<ExtClass>),
}

pub fn generating_extension(
    alg: &GentleAlgebra,
    s: &ModuleSum,
    x: &ModuleSum,
) -> Result<GeneratingExtension, Error> {
    let basis = ext_basis(alg, s, x)?;
    match basis.len() {
        0 => Ok(GeneratingExtension::Split { y: x.plus(s) }),
        1 => Ok(GeneratingExtension::Class(Box::new(basis.into_iter().next().unwrap()))),
        n => Err(DomainError::ExtDimension { found: n }.into()),
    }
}

/// Report of the chi-decomposition check across all dimension vectors,
/// phrased as the F-polynomial identity F_X F_S = F_Y + y^{dim S_under} F_M.
#[derive(Debug, Clone)]
pub struct DecompositionReport {
    pub holds: bool,
    pub first_failure: Option<Vec<u32>>,
    pub lhs: YPolynomial,
    pub rhs: YPolynomial,
    pub data: MultiplicationData,
}

pub fn verify_decomposition(
    alg: &GentleAlgebra,
    x: &ModuleSum,
    s: &ModuleSum,
) -> Result<DecompositionReport, Error> {
    let data = multiplication_data(alg, x, s)?;
    let lhs = f_polynomial(alg, x).mul(&f_polynomial(alg, s));
    let dim_su = dim_vector(alg, &ModuleSum::from_module(Module::String(data.sunder.clone())));
    let fm = f_polynomial(&data.host, &data.m);
    let rhs = f_polynomial(alg, &data.y).add(&fm.mul_monomial(&dim_su, 1));
    let diff = lhs.sub(&rhs);
    let first_failure = diff.ordered_terms().first().map(|(e, _)| e.clone());
    Ok(DecompositionReport { holds: diff.is_zero(), first_failure, lhs, rhs, data })
}

/// The two sides of the cluster-character identity
/// CC(X) CC(S) = CC(Y) x^{gX+gS-gY} + y^{dim S_under} CC(M) x^{B dim + gX+gS-gM}.
#[derive(Debug, Clone)]
pub struct CcRelation {
    pub lhs: LaurentCC,
    pub rhs_y: LaurentCC,
    pub rhs_m: LaurentCC,
    pub exp_y: Vec<i64>,
    pub exp_m: Vec<i64>,
    pub holds: bool,
    pub data: MultiplicationData,
}

pub fn cc_relation(alg: &GentleAlgebra, x: &ModuleSum, s: &ModuleSum) -> Result<CcRelation, Error> {
    let data = multiplication_data(alg, x, s)?;
    if !data.added_arrows.is_empty() {
        return Err(DomainError::Other(
            "cluster-character identity requires the original host algebra".into(),
        )
        .into());
    }
    let gx = g_vector(alg, x);
    let gs = g_vector(alg, s);
    let gy = g_vector(alg, &data.y);
    let gm = g_vector(alg, &data.m);
    let n = alg.vertex_count();
    let dim_su = dim_vector(alg, &ModuleSum::from_module(Module::String(data.sunder.clone())));
    let dim_su_i: Vec<i64> = dim_su.iter().map(|&v| v as i64).collect();
    let b = alg.exchange_matrix();
    let bdim = b.mul_vec(&dim_su_i);
    let exp_y: Vec<i64> = (0..n).map(|i| gx[i] + gs[i] - gy[i]).collect();
    let exp_m: Vec<i64> = (0..n).map(|i| bdim[i] + gx[i] + gs[i] - gm[i]).collect();
    let lhs = cluster_character(alg, x).mul(&cluster_character(alg, s));
    let rhs_y = cluster_character(alg, &data.y).shift(&exp_y, &vec![0; n]);
    let rhs_m = cluster_character(alg, &data.m).shift(&exp_m, &dim_su);
    let holds = lhs == rhs_y.add(&rhs_m);
    Ok(CcRelation { lhs, rhs_y, rhs_m, exp_y, exp_m, holds, data })
}

/// Exchange-relation criterion over surface algebras: X and S rigid
/// indecomposable with one-dimensional Ext.
#[derive(Debug, Clone)]
pub struct ExchangeDiagnosis {
    pub is_exchange: bool,
    pub reason: String,
    pub relation: Option<CcRelation>,
}

pub fn is_exchange_relation(
    alg: &GentleAlgebra,
    x: &ModuleSum,
    s: &ModuleSum,
) -> Result<ExchangeDiagnosis, Error> {
    if !alg.from_triangulation {
        return Err(DomainError::Other(
            "algebra is not tagged as arising from a triangulation".into(),
        )
        .into());
    }
    if x.summands().len() != 1 || s.summands().len() != 1 {
        return Ok(ExchangeDiagnosis {
            is_exchange: false,
            reason: "X and S must be indecomposable".into(),
            relation: None,
        });
    }
    if !is_rigid(alg, x)? {
        return Ok(ExchangeDiagnosis {
            is_exchange: false,
            reason: "X is not rigid".into(),
            relation: None,
        });
    }
    if !is_rigid(alg, s)? {
        return Ok(ExchangeDiagnosis {
            is_exchange: false,
            reason: "S is not rigid".into(),
            relation: None,
        });
    }
    let dim = ext_basis(alg, s, x)?.len();
    if dim != 1 {
        return Ok(ExchangeDiagnosis {
            is_exchange: false,
            reason: format!("Ext dimension is {dim}, not 1"),
            relation: None,
        });
    }
    let relation = cc_relation(alg, x, s)?;
    Ok(ExchangeDiagnosis {
        is_exchange: true,
        reason: "rigid indecomposable pair with one-dimensional Ext".into(),
        relation: Some(relation),
    })
}

/// Classification of a generating extension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceClass {
    Split,
    AlmostSplit,
    GeneralizedAlmostSplit,
    Generic,
}

impl std::fmt::Display for SequenceClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            SequenceClass::Split => "split",
            SequenceClass::AlmostSplit => "almost_split",
            SequenceClass::GeneralizedAlmostSplit => "generalized_almost_split",
            SequenceClass::Generic => "generic",
        };
        write!(f, "{s}")
    }
}

pub fn classify_sequence(
    alg: &GentleAlgebra,
    x: &ModuleSum,
    s: &ModuleSum,
) -> Result<SequenceClass, Error> {
    let dim = ext_basis(alg, s, x)?.len();
    if dim == 0 {
        return Ok(SequenceClass::Split);
    }
    if dim != 1 {
        return Err(DomainError::ExtDimension { found: dim }.into());
    }
    let data = multiplication_data(alg, x, s)?;
    let sunder_sum = ModuleSum::from_module(Module::String(data.sunder.clone()));
    let gas = data.xbar.is_zero() && sunder_sum == *s;
    if !gas {
        return Ok(SequenceClass::Generic);
    }
    if tau_sum(alg, s) == *x {
        Ok(SequenceClass::AlmostSplit)
    } else {
        Ok(SequenceClass::GeneralizedAlmostSplit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::modules::{parse_module_sum, pretty};

    fn msum(alg: &GentleAlgebra, expr: &str) -> ModuleSum {
        parse_module_sum(alg, expr).unwrap()
    }

    #[test]
    fn octagon_exchange_pair() {
        let alg = fixtures::octagon();
        let x = msum(&alg, "str c~ d");
        let s = msum(&alg, "str b f~");
        let data = multiplication_data(&alg, &x, &s).unwrap();
        assert_eq!(pretty(&alg, &data.xbar), "1 + 4");
        assert_eq!(
            pretty(&alg, &ModuleSum::from_module(Module::String(data.sunder.clone()))),
            "3"
        );
        assert_eq!(pretty(&alg, &data.s_mod_sunder), "2 + 5");
        assert_eq!(pretty(&alg, &data.y), "2/3/4 + 5/3/1");
        assert!(data.added_arrows.is_empty());
        assert_eq!(pretty(&data.host, &data.m), "1/2 + 4/5");
        assert_eq!(data.ext_su_xmod, 0);
        assert_eq!(data.m_rigid, Some(true));

        let rep = verify_decomposition(&alg, &x, &s).unwrap();
        assert!(rep.holds, "chi decomposition fails: {:?}", rep.first_failure);

        let cc = cc_relation(&alg, &x, &s).unwrap();
        assert_eq!(cc.exp_y, vec![0; 5]);
        assert_eq!(cc.exp_m, vec![0; 5]);
        assert!(cc.holds);

        let diag = is_exchange_relation(&alg, &x, &s).unwrap();
        assert!(diag.is_exchange);

        assert_eq!(classify_sequence(&alg, &x, &s).unwrap(), SequenceClass::Generic);
    }

    #[test]
    fn arrow_case_example() {
        // X = M(b) = 2/1, S = S(3) over algebra (i): F_X F_S = F_Y + y3.
        let alg = fixtures::algebra_i();
        let x = msum(&alg, "str b");
        let s = msum(&alg, "str e(3,+)");
        let data = multiplication_data(&alg, &x, &s).unwrap();
        assert!(data.xbar.is_zero());
        assert_eq!(
            pretty(&alg, &ModuleSum::from_module(Module::String(data.sunder.clone()))),
            "3"
        );
        assert!(data.s_mod_sunder.is_zero());
        assert!(data.m.is_zero());
        let rep = verify_decomposition(&alg, &x, &s).unwrap();
        assert!(rep.holds);
        // rhs = F_Y + y3 * 1
        let y3 = YPolynomial::monomial(vec![0, 0, 1], 1);
        assert_eq!(rep.lhs, f_polynomial(&alg, &data.y).add(&y3));
        assert_eq!(
            classify_sequence(&alg, &x, &s).unwrap(),
            SequenceClass::GeneralizedAlmostSplit
        );
    }

    #[test]
    fn band_case_example() {
        let alg = fixtures::band_algebra();
        let x = msum(&alg, "band a~ e a d~ f d");
        let s = msum(&alg, "str c e a d~");
        let data = multiplication_data(&alg, &x, &s).unwrap();
        // the kernel of the map to the translate comes from the maximal
        // overlap e a d~ f, leaving the single node at vertex 1
        assert_eq!(pretty(&alg, &data.xbar), "1");
        assert_eq!(
            crate::modules::dim_vector(
                &alg,
                &ModuleSum::from_module(Module::String(data.sunder.clone()))
            ),
            vec![1, 2, 1, 0]
        );
        assert_eq!(pretty(&alg, &data.s_mod_sunder), "4");
        assert!(data.added_arrows.is_empty());
        assert_eq!(pretty(&data.host, &data.m), "1/4");
        let rep = verify_decomposition(&alg, &x, &s).unwrap();
        assert!(rep.holds, "band decomposition fails: {:?}", rep.first_failure);
        // identity: F_X F_S = F_Y + y1 y2^2 y3 F_{1/4}
        let dim_su = crate::modules::dim_vector(
            &alg,
            &ModuleSum::from_module(Module::String(data.sunder.clone())),
        );
        assert_eq!(dim_su, vec![1, 2, 1, 0]);
    }

    #[test]
    fn extended_algebra_first_pair() {
        // X = 5/14/2 = M(a~ d~ e), S = 45/1 = M(c d~): added arrow @L: 2 -> 4,
        // M = 2/4, host still gentle.
        let alg = fixtures::extended_example();
        let x = msum(&alg, "str a~ d~ e");
        let s = msum(&alg, "str c d~");
        let data = multiplication_data(&alg, &x, &s).unwrap();
        assert_eq!(pretty(&alg, &data.xbar), "2");
        assert_eq!(
            pretty(&alg, &ModuleSum::from_module(Module::String(data.sunder.clone()))),
            "5/1"
        );
        assert_eq!(pretty(&alg, &data.s_mod_sunder), "4");
        assert_eq!(data.added_arrows.len(), 1);
        let (name, src, tgt) = &data.added_arrows[0];
        assert_eq!(name, "@L");
        assert_eq!(alg.quiver().vertex_name(*src), "2");
        assert_eq!(alg.quiver().vertex_name(*tgt), "4");
        assert!(data.host.gentle);
        assert_eq!(pretty(&data.host, &data.m), "2/4");
        let rep = verify_decomposition(&alg, &x, &s).unwrap();
        assert!(rep.holds, "first extended pair fails: {:?}", rep.first_failure);
        // coefficient is y1 y5
        let dim_su = dim_vector(&alg, &ModuleSum::from_module(Module::String(data.sunder)));
        assert_eq!(dim_su, vec![1, 0, 0, 0, 1]);
    }

    #[test]
    fn extended_algebra_second_pair() {
        // X = 1/3 = M(b), S = 45/1 = M(c d~): added arrow @R: 3 -> 5,
        // M = 3/5, host not even a string algebra.
        let alg = fixtures::extended_example();
        let x = msum(&alg, "str b");
        let s = msum(&alg, "str c d~");
        let data = multiplication_data(&alg, &x, &s).unwrap();
        assert_eq!(pretty(&alg, &data.xbar), "3");
        assert_eq!(
            pretty(&alg, &ModuleSum::from_module(Module::String(data.sunder.clone()))),
            "4/1"
        );
        assert_eq!(pretty(&alg, &data.s_mod_sunder), "5");
        assert_eq!(data.added_arrows.len(), 1);
        let (name, src, tgt) = &data.added_arrows[0];
        assert_eq!(name, "@R");
        assert_eq!(alg.quiver().vertex_name(*src), "3");
        assert_eq!(alg.quiver().vertex_name(*tgt), "5");
        assert!(!data.host.gentle);
        assert_eq!(data.m_rigid, None);
        assert_eq!(pretty(&data.host, &data.m), "3/5");
        let rep = verify_decomposition(&alg, &x, &s).unwrap();
        assert!(rep.holds, "second extended pair fails: {:?}", rep.first_failure);
        let dim_su = dim_vector(&alg, &ModuleSum::from_module(Module::String(data.sunder)));
        assert_eq!(dim_su, vec![1, 0, 0, 1, 0]);
    }

    #[test]
    fn hereditary_a5_pair() {
        // X = 3/2/1, S = 5/4/3: Xbar = 1, Sunder = 4/3, M = 1 + 5.
        let alg = fixtures::a5();
        let x = msum(&alg, "str b a");
        let s = msum(&alg, "str d c");
        let data = multiplication_data(&alg, &x, &s).unwrap();
        assert_eq!(pretty(&alg, &data.xbar), "1");
        assert_eq!(
            pretty(&alg, &ModuleSum::from_module(Module::String(data.sunder.clone()))),
            "4/3"
        );
        assert_eq!(pretty(&alg, &data.s_mod_sunder), "5");
        assert!(data.added_arrows.is_empty());
        assert_eq!(data.ext_su_xmod, 1, "hereditary case always has nonzero Ext");
        assert_eq!(pretty(&alg, &data.m), "1 + 5");
        let rep = verify_decomposition(&alg, &x, &s).unwrap();
        assert!(rep.holds);
        let cc = cc_relation(&alg, &x, &s).unwrap();
        assert!(cc.holds);
        // coefficient y3 y4, x-corrections zero
        assert_eq!(cc.exp_y, vec![0; 5]);
        assert_eq!(cc.exp_m, vec![0; 5]);
        let dim_su = dim_vector(&alg, &ModuleSum::from_module(Module::String(data.sunder)));
        assert_eq!(dim_su, vec![0, 0, 1, 1, 0]);
    }

    #[test]
    fn counterexample_classification() {
        // 0 -> 3/4 -> 3 + 2/3/4 -> 2/3 -> 0 is generalized almost split but
        // not almost split.
        let alg = fixtures::counterexample();
        let x = msum(&alg, "str c"); // 3/4
        let s = msum(&alg, "str b"); // 2/3
        assert_eq!(
            classify_sequence(&alg, &x, &s).unwrap(),
            SequenceClass::GeneralizedAlmostSplit
        );
        // an AR sequence classifies as almost split
        let m = msum(&alg, "str c d~"); // 35/4
        let right = crate::ar::tau_inv(&alg, &m.summands()[0].clone());
        let x2 = m;
        let s2 = ModuleSum::from_module(right);
        assert_eq!(classify_sequence(&alg, &x2, &s2).unwrap(), SequenceClass::AlmostSplit);
    }

    #[test]
    fn split_case() {
        let alg = fixtures::octagon();
        let x = msum(&alg, "str c~ d");
        assert_eq!(classify_sequence(&alg, &x, &x).unwrap(), SequenceClass::Split);
        match generating_extension(&alg, &x, &x).unwrap() {
            GeneratingExtension::Split { y } => assert_eq!(y, x.plus(&x)),
            _ => panic!("expected split"),
        }
    }

    #[test]
    fn loop_algebra_splice_through_existing_loop() {
        // a loop can carry the splice arrow and also creates an extra
        // extension of the residual pair; the flank conditions still decide
        let alg = crate::algebra::parse_algebra(
            "vertices v0 v1 v2 v3\narrow a0 v1 v1\narrow a1 v0 v2\narrow a2 v3 v0\narrow a3 v1 v0\nrelation a0 a0\nrelation a2 a1\n",
        )
        .unwrap();
        let x = msum(&alg, "str a3~ a0 a3");
        let s = msum(&alg, "str a0~ a3 a1");
        let data = multiplication_data(&alg, &x, &s).unwrap();
        assert!(data.added_arrows.is_empty());
        assert_eq!(data.ext_su_xmod, 1);
        assert_eq!(
            data.m,
            msum(&alg, "str a3~ a0 a3 a1"),
            "splice through the loop"
        );
        let rep = verify_decomposition(&alg, &x, &s).unwrap();
        assert!(rep.holds);
    }

    #[test]
    fn band_input_never_exchange() {
        let alg = fixtures::band_algebra();
        let mut surface = alg.clone();
        surface.from_triangulation = true;
        let x = msum(&surface, "band a~ e a d~ f d");
        let s = msum(&surface, "str c e a d~");
        let diag = is_exchange_relation(&surface, &x, &s).unwrap();
        assert!(!diag.is_exchange);
        assert_eq!(diag.reason, "X is not rigid");
    }
}
