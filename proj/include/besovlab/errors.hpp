#pragma once

#include <stdexcept>
#include <string>

namespace besovlab {

// Grid too coarse for the requested frequency content. Carries the minimal
// admissible point count so callers can retry.
class ResolutionError : public std::runtime_error {
  public:
    ResolutionError(const std::string& what, int required_points)
        : std::runtime_error(what), required_points_(required_points) {}
    int required_points() const { return required_points_; }

  private:
    int required_points_;
};

// Spectral data breaks conjugate symmetry (i.e. does not describe a real field).
class MalformedCoefficientsError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Frequency content exceeds the cached multiplier tables of a partition.
class PartitionRangeError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Iterative refinement hit its cap before reaching the requested tolerance.
// Carries the last two iterates for diagnosis.
class ToleranceError : public std::runtime_error {
  public:
    ToleranceError(const std::string& what, double previous, double last)
        : std::runtime_error(what), previous_(previous), last_(last) {}
    double previous_iterate() const { return previous_; }
    double last_iterate() const { return last_; }

  private:
    double previous_;
    double last_;
};

// A state tagged for one equation was fed to the solver/checker of another.
class WrongEquationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Numerical blow-up (NaN/overflow) during time integration.
class BlowUpError : public std::runtime_error {
  public:
    BlowUpError(const std::string& what, double last_stable_time)
        : std::runtime_error(what), last_stable_time_(last_stable_time) {}
    double last_stable_time() const { return last_stable_time_; }

  private:
    double last_stable_time_;
};

}  // namespace besovlab
