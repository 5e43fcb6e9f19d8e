//! Recognition algorithms that return a witness drawing on acceptance.

pub mod outer3;
pub mod snake;
pub mod stego;

use crate::drawing::BundledDrawing;
use alloc::string::String;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecognitionResult {
    pub accepted: bool,
    pub witness: Option<BundledDrawing>,
    pub reason: Option<String>,
}

impl RecognitionResult {
    pub fn accept(witness: BundledDrawing) -> Self {
        RecognitionResult { accepted: true, witness: Some(witness), reason: None }
    }

    pub fn reject(reason: impl Into<String>) -> Self {
        RecognitionResult { accepted: false, witness: None, reason: Some(reason.into()) }
    }
}

pub use outer3::recognize_outer_triconnected;
pub use snake::recognize_twolayer_biconnected;
pub use stego::recognize_twolayer_maximal;
