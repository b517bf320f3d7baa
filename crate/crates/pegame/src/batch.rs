//! Independent runs fanned out over scoped worker threads.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use pegame_core::sim::{run_game_timed, GameConfig, GameResult};
use pegame_core::Result;

use crate::clock::InstantClock;

fn workers(jobs: usize) -> usize {
    thread::available_parallelism().map(|n| n.get()).unwrap_or(1).min(jobs).max(1)
}

/// Runs every configuration; results come back in input order.
pub fn run_all(configs: &[GameConfig]) -> Vec<Result<GameResult>> {
    let next = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<Result<GameResult>>>> = configs.iter().map(|_| Mutex::new(None)).collect();
    thread::scope(|s| {
        for _ in 0..workers(configs.len()) {
            s.spawn(|| {
                let clock = InstantClock::new();
                loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    let Some(cfg) = configs.get(i) else { break };
                    let r = run_game_timed(cfg, &clock);
                    *slots[i].lock().expect("no worker panics while holding a slot") = Some(r);
                }
            });
        }
    });
    slots.into_iter().map(|m| m.into_inner().expect("slot lock not poisoned").expect("every slot filled")).collect()
}
