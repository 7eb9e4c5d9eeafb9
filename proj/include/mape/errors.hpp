// Exception hierarchy for the mape library. Every error thrown by the
// library derives from mape::Error, so callers can catch one type.

#pragma once

#include <stdexcept>
#include <string>

namespace mape {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// State construction
class LengthMismatch : public Error { public: using Error::Error; };
class ZeroVector : public Error { public: using Error::Error; };
class NotNormalized : public Error { public: using Error::Error; };
class BudgetExceeded : public Error { public: using Error::Error; };

// Index arithmetic
class DigitOutOfRange : public Error { public: using Error::Error; };
class IndexOutOfRange : public Error { public: using Error::Error; };

// Party bookkeeping
class InvalidPermutation : public Error { public: using Error::Error; };
class InvalidBipartition : public Error { public: using Error::Error; };

// Spectra and measures
class ConvergenceFailure : public Error { public: using Error::Error; };
class NotNormalizedSpectrum : public Error { public: using Error::Error; };
class NumericalError : public Error { public: using Error::Error; };
class LevelOutOfRange : public Error { public: using Error::Error; };
class SinglePartyState : public Error { public: using Error::Error; };

// Gallery
class InvalidExcitationCount : public Error { public: using Error::Error; };

// LOCC instruments
class DegenerateDraw : public Error { public: using Error::Error; };
class DimensionMismatch : public Error { public: using Error::Error; };

// Text inputs (state files, gallery specs, CLI arguments)
class ParseError : public Error { public: using Error::Error; };

} // namespace mape
