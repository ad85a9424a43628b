#pragma once

#include <stdexcept>
#include <string>

namespace evid {

// Every failure the engine can report. The CLI maps these onto its
// exit-code contract; library callers switch on the code.
enum class Err {
  Parse,                    // malformed document or rational literal
  EmptyDomain,              // no hypotheses, observations, or mappings
  DuplicateId,              // repeated hypothesis/observation id
  NonNormalizedLikelihood,  // likelihood masses out of range or sum != 1
  ImpossibleObservation,    // some mapping gives an observation zero mass everywhere
  UnknownId,                // id not present in the space
  InvalidDistribution,      // prior/posterior masses out of range or sum != 1
  UndefinedCombination,     // Dempster combination with vanishing normalizer
  ConditioningOnNull,       // Bayes conditioning on a zero-probability event
  ImpossibleSequence,       // observation sequence with zero mass under every hypothesis
  EmptyPosteriorSet,        // every combination in a posterior set undefined
  EmptyResult,              // every combined sequence weight undefined
  ZeroDenominator,          // bound formula denominator vanished
  CorrelatedSpace,          // operation requires an uncorrelated space
  ExplosionGuard,           // enumeration would exceed the configured cap
};

const char* err_name(Err code);

class EvidError : public std::runtime_error {
 public:
  EvidError(Err code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& message) {
  throw EvidError(code, message);
}

}  // namespace evid
