#pragma once

#include <cstddef>
#include <cstdint>

#include "eegsp/segment.hpp"

namespace eegsp {

// Deterministic two-class stand-in corpus for runs without real recordings:
// the normal class is a low-amplitude multi-tone background, the epileptic
// class a high-amplitude slow oscillation with a periodic spike train. The
// amplitude gap makes the classes cleanly separable by the feature set.
LabeledDataset make_surrogate_dataset(std::size_t per_class, std::size_t length,
                                      double sample_rate, std::uint32_t seed);

}  // namespace eegsp
