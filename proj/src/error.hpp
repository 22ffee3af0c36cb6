// Copyright (C) 2026 The sckv authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace sckv {

/// Error categories. Kept in sync with the sckv_status codes of the public
/// C API (see include/sckv/sckv.h); capi.cpp owns the mapping.
enum class Status {
    ok = 0,
    invalid_argument = 1,
    io_error = 2,
    bad_magic = 3,
    bad_version = 4,
    bad_crc = 5,
    truncated = 6,
    invariant_violation = 7,
    bad_json = 8,
    wrong_kind = 9,
};

const char* status_name(Status s);

class Error : public std::runtime_error {
public:
    Error(Status code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Status code() const { return code_; }

private:
    Status code_;
};

}  // namespace sckv
