"""Deliberately naive reference implementation used to cross-check the
optimized code. Plain Python lists, nested loops, one formula at a time,
accumulating in input order. Slow on purpose; do not optimize.
"""


def left_to_right_sum(values):
    total = 0.0
    for v in values:
        total = total + v
    return total


def naive_train(X, y, positive_label, epsilon):
    """Weights and bias for one hyperplane, straight from the formulas.

    Returns (weights, bias, mu_pos, mu_neg, tau_pos, tau_neg).
    """
    rows = len(X)
    cols = len(X[0])
    p = [1 if y[i] == positive_label else 0 for i in range(rows)]
    n_pos = sum(p)
    n_neg = rows - n_pos
    assert n_pos > 0 and n_neg > 0

    mu_pos = []
    for j in range(cols):
        mu_pos.append(left_to_right_sum([X[i][j] * p[i] for i in range(rows)]) / n_pos)
    mu_neg = []
    for j in range(cols):
        mu_neg.append(left_to_right_sum([X[i][j] * (1 - p[i]) for i in range(rows)]) / n_neg)

    weights = []
    for j in range(cols):
        den = mu_pos[j] + mu_neg[j] + epsilon
        if den == 0.0:
            weights.append(0.0)
        else:
            weights.append((mu_pos[j] - mu_neg[j]) / den)

    e = []
    for i in range(rows):
        e.append(left_to_right_sum([weights[j] * X[i][j] for j in range(cols)]))

    tau_pos = left_to_right_sum([e[i] * p[i] for i in range(rows)]) / n_pos
    tau_neg = left_to_right_sum([e[i] * (1 - p[i]) for i in range(rows)]) / n_neg
    bias = -(tau_pos * n_neg + tau_neg * n_pos) / (n_neg + n_pos)
    return weights, bias, mu_pos, mu_neg, tau_pos, tau_neg


def naive_score(weights, bias, x):
    return left_to_right_sum([weights[j] * x[j] for j in range(len(weights))]) + bias


def naive_predict_binary(weights, bias, negative_label, positive_label, x):
    if naive_score(weights, bias, x) <= 0.0:
        return negative_label
    return positive_label


def naive_train_multiclass(X, y, epsilon):
    """One (weights, bias) per class, ascending class order, target class
    on the negative side of its own hyperplane."""
    classes = sorted(set(y))
    out = []
    for cls in classes:
        marker = ["rest" if label != cls else "own" for label in y]
        w, b, *_ = naive_train(X, marker, "rest", epsilon)
        out.append((cls, w, b))
    return out


def naive_predict_multiclass(per_class_models, x):
    best_idx = 0
    best = None
    for idx, (_, w, b) in enumerate(per_class_models):
        s = naive_score(w, b, x)
        if best is None or s < best:
            best = s
            best_idx = idx
    return per_class_models[best_idx][0]
