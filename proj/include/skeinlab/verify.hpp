#pragma once

#include <functional>
#include <string>
#include <vector>

#include "skeinlab/skein.hpp"

namespace skeinlab {
namespace verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // nonempty on failure
};

// Runs the named invariant checks of every module up to the given size cap.
// Checks are independent and may run on several threads; the report order is
// fixed regardless.
std::vector<CheckResult> run_all(int n_max = 6, int threads = 1);

// Coxeter relation check parameterized by the action, so a deliberately
// broken action can be used as a negative control of the harness itself.
using SiAction = std::function<skein::NCVector(int, const skein::NCVector&)>;
bool coxeter_relations_hold(int n, const SiAction& action);

}  // namespace verify
}  // namespace skeinlab
