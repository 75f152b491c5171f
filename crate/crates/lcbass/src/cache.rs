//! Content-addressed cache of JSON results. Entries live in
//! `<dir>/<hh>/<sha256>.json`; writes go to a temporary file in the same
//! directory and are renamed into place, so readers never see partial data.
//! A fraction of hits is recomputed and compared byte for byte.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use lcbass_core::sr::SquareFreeIdeal;
use rand::Rng;
use serde_json::Value;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::report::to_bytes;

pub const CACHE_DIR_ENV: &str = "LCBASS_CACHE_DIR";
pub const AUDIT_RATE: f64 = 0.1;
pub const CODE_VERSION: &str = concat!(env!("CARGO_PKG_NAME"), "-", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache entry {key} differs from a fresh computation")]
    AuditMismatch { key: String },
    #[error("cache io at {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// `None` directory disables caching.
#[derive(Clone, Debug)]
pub struct Cache {
    dir: Option<PathBuf>,
    audit_rate: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lookup {
    Miss,
    Hit,
    AuditedHit,
    Disabled,
}

/// Canonical text of an ideal: variable count and sorted one-based
/// supports. Names do not affect results and are excluded.
pub fn canonical_form(ideal: &SquareFreeIdeal) -> String {
    let gens: Vec<String> = ideal
        .gens()
        .iter()
        .map(|g| {
            g.to_one_based()
                .iter()
                .map(|j| j.to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect();
    format!("n={};gens={}", ideal.nvars(), gens.join(";"))
}

/// SHA-256 over the canonical form, the computation tag and the code
/// version, each length-prefixed.
pub fn key(ideal: &SquareFreeIdeal, tag: &str) -> String {
    let mut h = Sha256::new();
    for part in [canonical_form(ideal).as_str(), tag, CODE_VERSION] {
        h.update((part.len() as u64).to_le_bytes());
        h.update(part.as_bytes());
    }
    hex::encode(h.finalize())
}

fn io(path: &Path) -> impl FnOnce(std::io::Error) -> CacheError + '_ {
    move |source| CacheError::Io {
        path: path.display().to_string(),
        source,
    }
}

impl Cache {
    pub fn disabled() -> Self {
        Cache {
            dir: None,
            audit_rate: 0.0,
        }
    }

    pub fn at(dir: impl Into<PathBuf>) -> Self {
        Cache {
            dir: Some(dir.into()),
            audit_rate: AUDIT_RATE,
        }
    }

    /// Directory from the environment; disabled when unset or `no_cache`.
    pub fn from_env(no_cache: bool) -> Self {
        match std::env::var_os(CACHE_DIR_ENV) {
            Some(d) if !no_cache && !d.is_empty() => Cache::at(d),
            _ => Cache::disabled(),
        }
    }

    pub fn with_audit_rate(mut self, rate: f64) -> Self {
        self.audit_rate = rate;
        self
    }

    pub fn is_enabled(&self) -> bool {
        self.dir.is_some()
    }

    fn path(&self, key: &str) -> Option<PathBuf> {
        self.dir
            .as_ref()
            .map(|d| d.join(&key[..2]).join(format!("{key}.json")))
    }

    /// Returns the cached value for `(ideal, tag)` or computes and stores
    /// it. Errors from `compute` pass through unchanged.
    pub fn get_or_compute<E: From<CacheError>>(
        &self,
        ideal: &SquareFreeIdeal,
        tag: &str,
        compute: impl FnOnce() -> Result<Value, E>,
    ) -> Result<(Value, Lookup), E> {
        let k = key(ideal, tag);
        let Some(path) = self.path(&k) else {
            return Ok((compute()?, Lookup::Disabled));
        };
        if let Ok(bytes) = fs::read(&path) {
            if let Ok(v) = serde_json::from_slice::<Value>(&bytes) {
                if self.audit_rate > 0.0 && rand::thread_rng().gen_bool(self.audit_rate.min(1.0)) {
                    let fresh = compute()?;
                    if to_bytes(&fresh) != bytes {
                        return Err(CacheError::AuditMismatch { key: k }.into());
                    }
                    return Ok((fresh, Lookup::AuditedHit));
                }
                return Ok((v, Lookup::Hit));
            }
        }
        let v = compute()?;
        self.store(&path, &to_bytes(&v))?;
        Ok((v, Lookup::Miss))
    }

    fn store(&self, path: &Path, bytes: &[u8]) -> Result<(), CacheError> {
        let dir = path.parent().expect("entries sit in a shard directory");
        fs::create_dir_all(dir).map_err(io(dir))?;
        let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io(dir))?;
        tmp.write_all(bytes).map_err(io(path))?;
        tmp.as_file().sync_all().map_err(io(path))?;
        tmp.persist(path).map_err(|e| CacheError::Io {
            path: path.display().to_string(),
            source: e.error,
        })?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn ideal() -> SquareFreeIdeal {
        SquareFreeIdeal::from_one_based(3, &[&[1, 2], &[2, 3]]).unwrap()
    }

    #[test]
    fn keys_separate_tags_and_ignore_names() {
        let i = ideal();
        assert_ne!(key(&i, "info"), key(&i, "verify"));
        let named = SquareFreeIdeal::with_names(
            3,
            i.gens().to_vec(),
            vec!["a".into(), "b".into(), "c".into()],
        )
        .unwrap();
        assert_eq!(key(&i, "info"), key(&named, "info"));
        assert_eq!(key(&i, "info").len(), 64);
    }

    #[test]
    fn miss_then_hit() {
        let dir = tempfile::tempdir().unwrap();
        let c = Cache::at(dir.path()).with_audit_rate(0.0);
        let i = ideal();
        let (v, l) = c
            .get_or_compute::<CacheError>(&i, "t", || Ok(json!({"a": 1})))
            .unwrap();
        assert_eq!((v, l), (json!({"a": 1}), Lookup::Miss));
        let (v, l) = c
            .get_or_compute::<CacheError>(&i, "t", || panic!("must hit"))
            .unwrap();
        assert_eq!((v, l), (json!({"a": 1}), Lookup::Hit));
    }

    #[test]
    fn audit_catches_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let i = ideal();
        let c = Cache::at(dir.path()).with_audit_rate(1.0);
        c.get_or_compute::<CacheError>(&i, "t", || Ok(json!({"a": 1})))
            .unwrap();
        let (_, l) = c
            .get_or_compute::<CacheError>(&i, "t", || Ok(json!({"a": 1})))
            .unwrap();
        assert_eq!(l, Lookup::AuditedHit);
        let path = c.path(&key(&i, "t")).unwrap();
        fs::write(&path, to_bytes(&json!({"a": 2}))).unwrap();
        let e = c
            .get_or_compute::<CacheError>(&i, "t", || Ok(json!({"a": 1})))
            .unwrap_err();
        assert!(matches!(e, CacheError::AuditMismatch { .. }));
    }

    #[test]
    fn unreadable_entry_is_recomputed() {
        let dir = tempfile::tempdir().unwrap();
        let i = ideal();
        let c = Cache::at(dir.path()).with_audit_rate(0.0);
        let path = c.path(&key(&i, "t")).unwrap();
        fs::create_dir_all(path.parent().unwrap()).unwrap();
        fs::write(&path, b"{trunc").unwrap();
        let (_, l) = c
            .get_or_compute::<CacheError>(&i, "t", || Ok(json!(1)))
            .unwrap();
        assert_eq!(l, Lookup::Miss);
        assert_eq!(fs::read(&path).unwrap(), to_bytes(&json!(1)));
    }

    #[test]
    fn disabled_always_computes() {
        let (_, l) = Cache::disabled()
            .get_or_compute::<CacheError>(&ideal(), "t", || Ok(json!(0)))
            .unwrap();
        assert_eq!(l, Lookup::Disabled);
    }
}
