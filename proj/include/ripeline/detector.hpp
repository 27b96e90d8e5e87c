#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ripeline/checkpoint.hpp"
#include "ripeline/image.hpp"

namespace ripeline {

// Thumbnail-level binary supervision: does this crop contain a tomato.
struct DetectionLabel {
    std::string thumbnail_path;
    bool is_tomato = false;
};

// In-memory variant used by training and by tests.
struct DetectorSample {
    RgbImage image;
    bool is_tomato = false;
};

// Binary region validator. Fixed architecture:
//   32x32x3 in [0,1] -> conv 3x3x8 (pad 1) -> relu -> maxpool 2x2
//                    -> conv 3x3x16 (pad 1) -> relu -> maxpool 2x2
//                    -> dense 1024 -> 2 -> softmax
struct DetectorModel {
    static constexpr int kInputSide = 32;
    static constexpr const char* kArchitecture = "ripeline-detector-v1";

    std::vector<double> conv1_w;  // 8 x 27  (out, in*3*3)
    std::vector<double> conv1_b;  // 8
    std::vector<double> conv2_w;  // 16 x 72
    std::vector<double> conv2_b;  // 16
    std::vector<double> fc_w;     // 2 x 1024
    std::vector<double> fc_b;     // 2

    int epochs_trained = 0;
    std::uint64_t seed = 0;
    double final_loss = 0.0;

    Checkpoint to_checkpoint() const;
    static DetectorModel from_checkpoint(const Checkpoint& ck);
};

struct DetectionScore {
    double score = 0.0;  // probability of tomato
    bool accepted = false;
};

// Probability of {not tomato, tomato} for one 32x32 thumbnail.
// Throws InputError if the image is not 32x32.
std::array<double, 2> detector_forward(const DetectorModel& model, const RgbImage& thumb);

// Mini-batch gradient descent on softmax cross-entropy, batch size 8,
// deterministic given the seed. Inputs are resized to 32x32 as needed.
// Throws TrainingError when only one class is present and DivergenceError
// (naming the epoch) when the loss leaves the finite range.
DetectorModel train_detector(const std::vector<DetectorSample>& data, int epochs,
                             double learning_rate, std::uint64_t seed);

// Path-based variant per the dataset layout; loads and delegates.
DetectorModel train_detector(const std::vector<DetectionLabel>& data, int epochs,
                             double learning_rate, std::uint64_t seed);

// Scores thumbnails in order. Thumbnails must be square at the model's
// input size. accepted == (score >= threshold).
std::vector<DetectionScore> validate_regions(const DetectorModel& model,
                                             const std::vector<RgbImage>& thumbs,
                                             double threshold);

}  // namespace ripeline
