#pragma once

namespace cci {

// Applies the CCI_THREADS env var (0 or unset = automatic) to the OpenMP
// runtime. Returns the thread cap in effect (0 meaning automatic). Safe to
// call when built without OpenMP (no-op).
int apply_thread_env();

} // namespace cci
