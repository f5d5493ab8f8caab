/* Linear classifier model data. Generated file, do not edit. */
#ifndef SEFR_MODEL_DATA_H
#define SEFR_MODEL_DATA_H

#define SEFR_FEATURE_COUNT 8
#define SEFR_CLASS_COUNT 2
#define SEFR_SCORE_COUNT 1

/* Input: SEFR_FEATURE_COUNT bytes, each scaled by (1.0f / 255.0f).
 * SEFR_SCORE_COUNT == 1: score = dot(w[0], x) + bias[0];
 *   predicted index = score > 0 ? 1 : 0.
 * Otherwise: one score per class; predicted index = argmin,
 *   first minimum on ties. Index into sefr_classes. */

static const char *const sefr_classes[SEFR_CLASS_COUNT] = {
    "0",
    "1",
};

static const float sefr_weights[SEFR_SCORE_COUNT][SEFR_FEATURE_COUNT] = {
    { 0.506178856f, 0.505807579f, 0.48984313f, 0.503061831f, 0.463714212f, 0.51061821f, 0.494606078f, 0.499395043f },
};

static const float sefr_biases[SEFR_SCORE_COUNT] = {
    -1.99327707f,
};

#endif /* SEFR_MODEL_DATA_H */
