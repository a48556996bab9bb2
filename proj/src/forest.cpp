#include "hilbforest/forest.hpp"

#include "hilbforest/errors.hpp"

namespace hilbforest {

ForestNode::ForestNode(int codim, AdmissiblePolynomial hp) : codim_(codim), hp_(std::move(hp)) {
    if (codim < 1) throw ValidationError("codimension must be positive, got " + std::to_string(codim));
}

std::pair<ForestNode, ForestNode> children(const ForestNode& node) {
    return {ForestNode(node.codim(), plus(node.hp())), ForestNode(node.codim(), lift(node.hp()))};
}

PathWord path_for_index(int height, std::uint64_t index) {
    std::vector<Step> steps(static_cast<std::size_t>(height));
    for (int i = 0; i < height; ++i)
        steps[static_cast<std::size_t>(i)] = ((index >> (height - 1 - i)) & 1u) ? Step::Lift : Step::Plus;
    return PathWord(std::move(steps));
}

HeightRange::HeightRange(int codim, int height) : codim_(codim), height_(height) {
    if (codim < 1) throw ValidationError("codimension must be positive, got " + std::to_string(codim));
    if (height < 0) throw ValidationError("height must be nonnegative");
    if (height > kMaxHeight)
        throw ResourceError("height " + std::to_string(height) + " exceeds guard " + std::to_string(kMaxHeight));
}

}  // namespace hilbforest
