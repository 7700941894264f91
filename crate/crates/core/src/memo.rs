//! Process-wide memo tables shared by the skein engines.
//!
//! Entries are pure functions of their key, so racing writers store equal
//! values. `SKEIN_MEMO_CAP` bounds the number of entries per table; once
//! full, new results are computed but not stored.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Mutex, OnceLock};

pub(crate) struct Memo<K, V> {
    table: OnceLock<Mutex<HashMap<K, V>>>,
}

fn cap() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| std::env::var("SKEIN_MEMO_CAP").ok().and_then(|s| s.parse().ok()).unwrap_or(usize::MAX))
}

impl<K: Hash + Eq, V: Clone> Memo<K, V> {
    pub(crate) const fn new() -> Self {
        Memo { table: OnceLock::new() }
    }

    fn table(&self) -> &Mutex<HashMap<K, V>> {
        self.table.get_or_init(|| Mutex::new(HashMap::new()))
    }

    pub(crate) fn get(&self, key: &K) -> Option<V> {
        self.table().lock().unwrap().get(key).cloned()
    }

    pub(crate) fn insert(&self, key: K, value: V) {
        let mut t = self.table().lock().unwrap();
        if t.len() < cap() {
            t.insert(key, value);
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.table().lock().unwrap().len()
    }
}
