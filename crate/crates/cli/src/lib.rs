//! Library side of the tinum CLI: resource-cap handling and the
//! verification battery behind `tinum verify`.

pub mod caps;
pub mod verify;
