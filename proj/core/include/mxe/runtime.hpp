// Copyright (c) the maxwell-enclosures authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace mxe {

/// Worker-thread cap for assembly and the BLAS backend.  Resolution order:
/// explicit set_thread_count(), the ENCLOSURE_FEM_THREADS environment
/// variable, then hardware concurrency.
int thread_count();
void set_thread_count(int n);

}  // namespace mxe
