//! Core algorithms for learning a tight-clearance peg-in-hole skill:
//! a quasi-static contact simulator, a robot-controller timing emulator,
//! the RL environment semantics (states, rewards, termination), and a
//! from-scratch two-layer LSTM Q-network trained by backpropagation
//! through time.
//!
//! The crate is `no_std`-compatible (`alloc` required); the default `std`
//! feature switches scalar math to the platform intrinsics. Everything is
//! deterministic given a seed: all randomness flows through named
//! [`rng`] streams derived from one master seed.

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod controller;
pub mod env;
pub mod lstm;
pub mod math;
pub mod params;
pub mod replay;
pub mod rng;
pub mod sim;

pub use controller::{ActionVector, Controller, ControllerError, SensorFrame};
pub use env::{
    check_terminal, decode_action, round_to_grid, EnvError, Phase, PhaseSpec, Progress,
    RewardRecord, StateVector, TerminalKind,
};
pub use lstm::{greedy_action, td_target, BatchSample, NetDims, NetError, QNetwork, RecurrentState};
pub use params::{epsilon_at, epsilon_for_stage, HyperParams};
pub use replay::{ReplayPool, Transition};
pub use sim::{ContactWrench, HoleSpec, PegPose, RawSample, SimConfig, SimError, Simulator};
