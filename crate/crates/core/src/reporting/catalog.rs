use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::array::Shape;
use crate::error::Result;
use crate::semiring::Semiring;
use crate::stratify::{stratify, RankTable};

type Loader = dyn Fn(Shape, Semiring) -> Result<RankTable> + Send + Sync;

/// Memoizes rank tables for the lifetime of one command or test.
pub struct Catalog {
    loader: Box<Loader>,
    tables: Mutex<HashMap<(Shape, Semiring), Arc<RankTable>>>,
}

impl Default for Catalog {
    fn default() -> Self {
        Self::with_loader(stratify)
    }
}

impl Catalog {
    pub fn new() -> Self {
        Self::default()
    }

    /// Uses `loader` (for example a disk cache in front of `stratify`) to
    /// produce tables on first request.
    pub fn with_loader<F>(loader: F) -> Self
    where
        F: Fn(Shape, Semiring) -> Result<RankTable> + Send + Sync + 'static,
    {
        Catalog {
            loader: Box::new(loader),
            tables: Mutex::new(HashMap::new()),
        }
    }

    pub fn table(&self, shape: Shape, semiring: Semiring) -> Result<Arc<RankTable>> {
        let key = (shape, semiring);
        if let Some(t) = self.tables.lock().unwrap().get(&key) {
            return Ok(Arc::clone(t));
        }
        let t = Arc::new((self.loader)(shape, semiring)?);
        self.tables.lock().unwrap().insert(key, Arc::clone(&t));
        Ok(t)
    }
}
