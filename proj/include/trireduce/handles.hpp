#pragma once

#include <compare>
#include <cstdint>
#include <functional>

namespace trireduce {

// Typed indices into the mesh element arrays. An invalid handle is the
// all-ones index; element indices are never reused within a mesh's lifetime,
// so handles stay meaningful across contractions.
template <class Tag>
struct Handle {
    static constexpr std::uint32_t npos = 0xffffffffu;

    std::uint32_t index = npos;

    constexpr Handle() = default;
    constexpr explicit Handle(std::uint32_t i) : index(i) {}

    constexpr bool valid() const { return index != npos; }

    friend constexpr bool operator==(Handle, Handle) = default;
    friend constexpr auto operator<=>(Handle, Handle) = default;
};

using VertexId = Handle<struct VertexIdTag>;
using EdgeId = Handle<struct EdgeIdTag>;
using FaceId = Handle<struct FaceIdTag>;
using HalfEdgeId = Handle<struct HalfEdgeIdTag>;

}  // namespace trireduce

template <class Tag>
struct std::hash<trireduce::Handle<Tag>> {
    std::size_t operator()(trireduce::Handle<Tag> h) const noexcept {
        return std::hash<std::uint32_t>{}(h.index);
    }
};
