#pragma once

#include <array>
#include <cstdint>

/* Tetrahedron labeling conventions used throughout:

   - vertices are 0..3
   - face i is the face opposite vertex i, so face i carries the three
     vertices != i (listed in increasing order by face_vertices)
   - edges are indexed 0..5 by the vertex pair they join:

       edge   0     1     2     3     4     5
       verts {0,1} {0,2} {0,3} {1,2} {1,3} {2,3}

     With this order, edge e and edge 5-e form an opposite pair; the three
     opposite pairs (quad/octagon types) are

       pair   0            1            2
       edges {0,1},{2,3}  {0,2},{1,3}  {0,3},{1,2}

   - a normal arc in face f is indexed by the face vertex it cuts off, so
     arc type (f,v) requires v != f and joins the two edges of f at v
   - crossing points along an edge are always counted from the lower
     numbered endpoint of the edge
*/

namespace ansurf {

inline constexpr int kVertexCount = 4;
inline constexpr int kFaceCount = 4;
inline constexpr int kEdgeCount = 6;
inline constexpr int kPairCount = 3;

inline constexpr std::array<std::array<int, 2>, 6> kEdgeVerts{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

constexpr int edge_index(int a, int b)
{
    if (a > b) {
        const int t = a;
        a = b;
        b = t;
    }
    // lexicographic rank of the pair (a,b), a < b
    constexpr int base[4] = {0, 3, 5, 6};
    return base[a] + (b - a - 1);
}

constexpr int opposite_edge(int e) { return 5 - e; }

constexpr int pair_of_edge(int e) { return e < 3 ? e : 5 - e; }

// The two edges of opposite pair p.
constexpr std::array<int, 2> pair_edges(int p) { return {p, 5 - p}; }

constexpr bool edge_has_vertex(int e, int v)
{
    return kEdgeVerts[e][0] == v || kEdgeVerts[e][1] == v;
}

constexpr int edge_other_vertex(int e, int v)
{
    return kEdgeVerts[e][0] == v ? kEdgeVerts[e][1] : kEdgeVerts[e][0];
}

// Partner of vertex v in opposite pair p: the other endpoint of the
// pair-p edge containing v.  Every vertex lies on exactly one edge of
// each pair.
constexpr int pair_partner(int p, int v)
{
    const auto pe = pair_edges(p);
    for (int e : pe) {
        if (edge_has_vertex(e, v)) return edge_other_vertex(e, v);
    }
    return -1;  // unreachable
}

// The three vertices of face f, increasing.
constexpr std::array<int, 3> face_vertices(int f)
{
    std::array<int, 3> out{};
    int k = 0;
    for (int v = 0; v < 4; ++v) {
        if (v != f) out[k++] = v;
    }
    return out;
}

constexpr bool face_has_vertex(int f, int v) { return v != f; }

constexpr bool face_has_edge(int f, int e)
{
    return !edge_has_vertex(e, f);
}

// The two faces adjacent to edge e.  These are exactly the endpoints of
// the opposite edge.
constexpr std::array<int, 2> edge_faces(int e)
{
    return kEdgeVerts[opposite_edge(e)];
}

constexpr int other_face_of_edge(int e, int f)
{
    const auto fs = edge_faces(e);
    return fs[0] == f ? fs[1] : fs[0];
}

// The edge shared by two distinct faces: the edge joining the two
// vertices lying on neither face.
constexpr int shared_edge(int f1, int f2)
{
    return opposite_edge(edge_index(f1, f2));
}

// The three edges at vertex v, increasing edge index.
constexpr std::array<int, 3> vertex_edges(int v)
{
    std::array<int, 3> out{};
    int k = 0;
    for (int e = 0; e < 6; ++e) {
        if (edge_has_vertex(e, v)) out[k++] = e;
    }
    return out;
}

// Arc type (f,v) joins the two edges of face f incident to v.
constexpr std::array<int, 2> arc_edges(int f, int v)
{
    std::array<int, 2> out{};
    int k = 0;
    for (int u = 0; u < 4; ++u) {
        if (u != f && u != v) out[k++] = edge_index(v, u);
    }
    return out;
}

// A permutation of the four vertex labels, image[i] = image of vertex i.
struct Perm4 {
    std::array<std::uint8_t, 4> image{0, 1, 2, 3};

    constexpr int operator[](int i) const { return image[i]; }

    constexpr Perm4 inverse() const
    {
        Perm4 out;
        for (int i = 0; i < 4; ++i) out.image[image[i]] = i;
        return out;
    }

    // (*this of other)(x) = this[other[x]]
    constexpr Perm4 of(const Perm4& other) const
    {
        Perm4 out;
        for (int i = 0; i < 4; ++i) out.image[i] = image[other.image[i]];
        return out;
    }

    constexpr bool is_identity() const
    {
        return image[0] == 0 && image[1] == 1 && image[2] == 2 && image[3] == 3;
    }

    friend constexpr bool operator==(const Perm4&, const Perm4&) = default;
};

}  // namespace ansurf
