//! JSON session files: a skew group algebra plus named cochains.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::sync::Arc;

use serde::de::{MapAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize};

use crate::algebra::group::DEFAULT_GROUP_CAP;
use crate::algebra::{FiniteMatrixGroup, Fp, GroupIdx, Matrix, Monomial, SkewElem, SkewRing, Wedge};
use crate::bracket::Cochain;
use crate::error::{Error, Result};
use crate::twisted::Generator;

/// Bounds for `selfcheck`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelfcheckBounds {
    pub hdeg: usize,
    pub ideg: usize,
    pub trials: usize,
    pub seed: u64,
}

impl Default for SelfcheckBounds {
    fn default() -> Self {
        SelfcheckBounds { hdeg: 3, ideg: 3, trials: 20, seed: 1 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawTerm {
    /// Exponent vector `"a,b,…"` to coefficient.
    pub poly: BTreeMap<String, i64>,
    #[serde(default)]
    pub group_word: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawEntry {
    /// One generator word per bar slot.
    #[serde(default)]
    pub bar: Vec<Vec<usize>>,
    #[serde(default)]
    pub wedge: Vec<String>,
    pub value: Vec<RawTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawCochain {
    pub degree: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub internal_degree: Option<i64>,
    pub entries: Vec<RawEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawSession {
    pub p: u64,
    pub variables: Vec<String>,
    pub group_generators: Vec<Vec<Vec<i64>>>,
    #[serde(default, deserialize_with = "unique_map")]
    pub cochains: BTreeMap<String, RawCochain>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub selfcheck: Option<SelfcheckBounds>,
}

fn unique_map<'de, D, V>(d: D) -> std::result::Result<BTreeMap<String, V>, D::Error>
where
    D: Deserializer<'de>,
    V: Deserialize<'de>,
{
    struct Unique<V>(std::marker::PhantomData<V>);
    impl<'de, V: Deserialize<'de>> Visitor<'de> for Unique<V> {
        type Value = BTreeMap<String, V>;
        fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
            f.write_str("an object with unique keys")
        }
        fn visit_map<M: MapAccess<'de>>(self, mut m: M) -> std::result::Result<Self::Value, M::Error> {
            let mut out = BTreeMap::new();
            while let Some((k, v)) = m.next_entry::<String, V>()? {
                if out.contains_key(&k) {
                    return Err(serde::de::Error::custom(format!("duplicate cochain name `{k}`")));
                }
                out.insert(k, v);
            }
            Ok(out)
        }
    }
    d.deserialize_map(Unique(std::marker::PhantomData))
}

/// A validated session.
#[derive(Clone, Debug)]
pub struct Session {
    ring: Arc<SkewRing>,
    cochains: BTreeMap<String, Cochain>,
    declared_internal: BTreeMap<String, i64>,
    pub selfcheck: Option<SelfcheckBounds>,
}

impl PartialEq for Session {
    fn eq(&self, other: &Self) -> bool {
        let fp = self.ring.fp();
        self.ring.fp() == other.ring.fp()
            && self.ring.names() == other.ring.names()
            && self.ring.group().generators().iter().map(|m| m.rows(fp)).collect::<Vec<_>>()
                == other.ring.group().generators().iter().map(|m| m.rows(fp)).collect::<Vec<_>>()
            && self.cochains == other.cochains
            && self.declared_internal == other.declared_internal
            && self.selfcheck == other.selfcheck
    }
}

fn validation(msg: impl Into<String>) -> Error {
    Error::Validation(msg.into())
}

pub fn build_ring(p: u64, variables: &[String], generators: &[Vec<Vec<i64>>]) -> Result<SkewRing> {
    let fp = Fp::new(p)?;
    let n = variables.len();
    if n == 0 || n > crate::algebra::wedge::MAX_VARS {
        return Err(validation(format!("variable count {n} out of range")));
    }
    for (i, a) in variables.iter().enumerate() {
        if a.is_empty() || variables[..i].contains(a) {
            return Err(validation(format!("variables: name `{a}` is empty or repeated")));
        }
    }
    let mut mats = Vec::with_capacity(generators.len());
    for (i, rows) in generators.iter().enumerate() {
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::BadShape { expected: n });
        }
        let m = Matrix::from_rows(rows, &fp)?;
        if m.inverse(&fp).is_none() {
            return Err(Error::NonInvertibleGenerator(i));
        }
        mats.push(m);
    }
    let group = FiniteMatrixGroup::generate(fp, n, mats, DEFAULT_GROUP_CAP)?;
    Ok(SkewRing::new(fp, variables.to_vec(), group))
}

fn parse_exponents(key: &str, n: usize, at: &str) -> Result<Monomial> {
    let parts: Vec<&str> = if key.trim().is_empty() { Vec::new() } else { key.split(',').collect() };
    if parts.len() != n {
        return Err(validation(format!("{at}: exponent key `{key}` needs {n} entries")));
    }
    let mut e = Vec::with_capacity(n);
    for s in parts {
        let v: u16 = s.trim().parse().map_err(|_| validation(format!("{at}: bad exponent `{s}`")))?;
        e.push(v);
    }
    Ok(Monomial(e))
}

fn exponent_key(m: &Monomial) -> String {
    m.0.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
}

fn resolve_word(ring: &SkewRing, word: &[usize], at: &str) -> Result<GroupIdx> {
    ring.group()
        .eval_word(word)
        .ok_or_else(|| validation(format!("{at}: generator index out of range in word {word:?}")))
}

pub fn parse_value(ring: &SkewRing, terms: &[RawTerm], at: &str) -> Result<SkewElem> {
    let fp = ring.fp();
    let mut v = SkewElem::zero();
    for (k, t) in terms.iter().enumerate() {
        let g = resolve_word(ring, &t.group_word, &format!("{at}.value[{k}]"))?;
        for (key, &c) in &t.poly {
            let m = parse_exponents(key, ring.nvars(), &format!("{at}.value[{k}]"))?;
            v.add_term(m, g, fp.from_i64(c), fp);
        }
    }
    Ok(v)
}

pub fn parse_cochain(ring: &SkewRing, name: &str, raw: &RawCochain) -> Result<Cochain> {
    let mut out = Cochain::zero(raw.degree);
    let mut seen = std::collections::BTreeSet::new();
    for (k, entry) in raw.entries.iter().enumerate() {
        let at = format!("cochains.{name}.entries[{k}]");
        let mut bar = Vec::with_capacity(entry.bar.len());
        for word in &entry.bar {
            let g = resolve_word(ring, word, &at)?;
            if g == ring.group().identity() {
                return Err(validation(format!("{at}: bar entry {word:?} is the identity")));
            }
            bar.push(g);
        }
        let mut idx = Vec::with_capacity(entry.wedge.len());
        for name in &entry.wedge {
            let i = ring
                .names()
                .iter()
                .position(|a| a == name)
                .ok_or_else(|| validation(format!("{at}: wedge index `{name}` is not a variable")))?;
            idx.push(i);
        }
        let (wedge, sign) = crate::algebra::wedge::wedge_from_unsorted(&idx, ring.fp())
            .ok_or_else(|| validation(format!("{at}: repeated wedge index")))?;
        if bar.len() + wedge.len() != raw.degree {
            return Err(validation(format!(
                "{at}: generator has degree {}, cochain has degree {}",
                bar.len() + wedge.len(),
                raw.degree
            )));
        }
        let e = Generator::new(bar, wedge);
        if !seen.insert(e.clone()) {
            return Err(validation(format!("{at}: generator listed twice")));
        }
        let value = parse_value(ring, &entry.value, &at)?.scaled(sign, ring.fp());
        if let Some(d) = raw.internal_degree {
            for deg in value.degrees() {
                if deg as i64 != wedge.len() as i64 + d {
                    return Err(validation(format!(
                        "{at}: value has polynomial degree {deg}, internal degree {d} needs {}",
                        wedge.len() as i64 + d
                    )));
                }
            }
        }
        out.set(e, value)?;
    }
    Ok(out)
}

pub fn cochain_to_raw(ring: &SkewRing, f: &Cochain, internal_degree: Option<i64>) -> RawCochain {
    let entries = f
        .values()
        .map(|(e, v)| RawEntry {
            bar: e.bar.iter().map(|&g| ring.group().word(g).to_vec()).collect(),
            wedge: e.wedge.indices().into_iter().map(|i| ring.names()[i].clone()).collect(),
            value: value_to_raw(ring, v),
        })
        .collect();
    RawCochain { degree: f.degree(), internal_degree, entries }
}

pub fn value_to_raw(ring: &SkewRing, v: &SkewElem) -> Vec<RawTerm> {
    v.iter()
        .map(|(g, s)| RawTerm {
            poly: s.iter().map(|(m, c)| (exponent_key(m), ring.fp().to_signed(c))).collect(),
            group_word: ring.group().word(g).to_vec(),
        })
        .collect()
}

fn location(e: &serde_json::Error) -> String {
    format!("line {} column {}", e.line(), e.column())
}

impl Session {
    pub fn new(ring: SkewRing) -> Self {
        Session { ring: Arc::new(ring), cochains: BTreeMap::new(), declared_internal: BTreeMap::new(), selfcheck: None }
    }

    pub fn from_raw(raw: &RawSession) -> Result<Self> {
        let ring = build_ring(raw.p, &raw.variables, &raw.group_generators)?;
        let mut s = Session::new(ring);
        for (name, rc) in &raw.cochains {
            let f = parse_cochain(&s.ring, name, rc)?;
            s.cochains.insert(name.clone(), f);
            if let Some(d) = rc.internal_degree {
                s.declared_internal.insert(name.clone(), d);
            }
        }
        s.selfcheck = raw.selfcheck;
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawSession = serde_json::from_str(text)
            .map_err(|e| Error::Parse { location: location(&e), message: e.to_string() })?;
        Session::from_raw(&raw)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse { location: path.display().to_string(), message: e.to_string() })?;
        Session::from_json(&text)
    }

    pub fn to_raw(&self) -> RawSession {
        let fp = self.ring.fp();
        RawSession {
            p: fp.p() as u64,
            variables: self.ring.names().to_vec(),
            group_generators: self.ring.group().generators().iter().map(|m| m.rows(fp)).collect(),
            cochains: self
                .cochains
                .iter()
                .map(|(k, f)| (k.clone(), cochain_to_raw(&self.ring, f, self.declared_internal.get(k).copied())))
                .collect(),
            selfcheck: self.selfcheck,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_raw()).expect("session serializes")
    }

    pub fn ring(&self) -> &SkewRing {
        &self.ring
    }

    pub fn ring_arc(&self) -> Arc<SkewRing> {
        self.ring.clone()
    }

    pub fn cochain(&self, name: &str) -> Result<&Cochain> {
        self.cochains.get(name).ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn cochains(&self) -> impl Iterator<Item = (&String, &Cochain)> + '_ {
        self.cochains.iter()
    }

    pub fn insert(&mut self, name: impl Into<String>, f: Cochain, internal_degree: Option<i64>) {
        let name = name.into();
        match internal_degree {
            Some(d) => self.declared_internal.insert(name.clone(), d),
            None => self.declared_internal.remove(&name),
        };
        self.cochains.insert(name, f);
    }

    pub fn declared_internal_degree(&self, name: &str) -> Option<i64> {
        self.declared_internal.get(name).copied()
    }

    pub fn wedge_names(&self, w: Wedge) -> Vec<String> {
        w.indices().into_iter().map(|i| self.ring.names()[i].clone()).collect()
    }
}
