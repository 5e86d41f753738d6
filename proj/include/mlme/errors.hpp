// Exception types shared across the library.
//
// SPDX-License-Identifier: Apache-2.0
#ifndef MLME_ERRORS_HPP
#define MLME_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mlme {

// Base class for every library-thrown error; carries a stable name so the
// CLI can map errors to machine-readable reports.
class error : public std::runtime_error {
public:
    error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class invalid_argument_error : public error {
public:
    explicit invalid_argument_error(const std::string& what)
        : error("InvalidArgument", what) {}
};

// A pivot underflowed while factorizing z*I - s*A: the shift sits on (or
// numerically on) the spectrum.
class singular_shift : public error {
public:
    singular_shift(std::size_t index, const std::string& what)
        : error("SingularShift", what), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class not_symmetrizable : public error {
public:
    not_symmetrizable(std::size_t index, const std::string& what)
        : error("NotSymmetrizable", what), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class convergence_failure : public error {
public:
    explicit convergence_failure(const std::string& what)
        : error("ConvergenceFailure", what) {}
};

class assumption_violated : public error {
public:
    assumption_violated(const std::string& what, double location)
        : error("AssumptionViolated", what), location_(location) {}
    double location() const noexcept { return location_; }

private:
    double location_;
};

class all_nodes_dropped : public error {
public:
    explicit all_nodes_dropped(const std::string& what)
        : error("AllNodesDropped", what) {}
};

class no_widening_suffices : public error {
public:
    no_widening_suffices(std::size_t worst_node, const std::string& what)
        : error("NoWideningSuffices", what), worst_node_(worst_node) {}
    std::size_t worst_node() const noexcept { return worst_node_; }

private:
    std::size_t worst_node_;
};

class divergence_guard : public error {
public:
    explicit divergence_guard(const std::string& what)
        : error("DivergenceGuard", what) {}
};

class cancellation_loss : public error {
public:
    explicit cancellation_loss(const std::string& what)
        : error("CancellationLoss", what) {}
};

class trust_region_exceeded : public error {
public:
    explicit trust_region_exceeded(const std::string& what)
        : error("TrustRegionExceeded", what) {}
};

class step_underflow : public error {
public:
    explicit step_underflow(const std::string& what)
        : error("StepUnderflow", what) {}
};

class node_branch_cut : public error {
public:
    explicit node_branch_cut(const std::string& what)
        : error("NodeBranchCut", what) {}
};

}  // namespace mlme

#endif  // MLME_ERRORS_HPP
