#pragma once

#include "report.hpp"

namespace dyqg::cli {

// Each returns the process exit status: 0 iff every check passed.
int cmd_verma(const Flags& f);
int cmd_fusion(const Flags& f);
int cmd_verify(const Flags& f);
int cmd_felder(const Flags& f);
int cmd_gauge_fit(const Flags& f);
int cmd_functor(const Flags& f);
int cmd_tensor(const Flags& f);

// Names of the identity suite, in the order --list-checks prints them.
const std::vector<std::string>& identity_suite();

// The part of the configuration that every command records and hashes.
json base_config(const std::string& command, const Flags& f, const Params& p);

}  // namespace dyqg::cli
