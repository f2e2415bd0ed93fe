#include "muq/canonical.hpp"

#include <algorithm>
#include <cassert>

namespace muq {

namespace {

void append_u16(std::string& s, int v) {
    s.push_back(static_cast<char>((v >> 8) & 0xff));
    s.push_back(static_cast<char>(v & 0xff));
}

} // namespace

std::string Canonicalizer::run(const PlaneMap& m, bool reflect, int marked_edge,
                               int* aut_out) {
    const int D = m.dart_count();
    if (D == 0) {
        if (aut_out) *aut_out = 1;
        std::string out;
        append_u16(out, 0);
        return out;
    }

    const int w = D <= 255 ? 1 : 2;
    const int entries = marked_edge >= 0 ? 3 : 2;
    const size_t body_len = static_cast<size_t>(D) * entries * w;

    const int* sig_fwd = m.sigma_table().data();
    const int* sig_bwd = nullptr;
    if (reflect) {
        sigma_inv_.assign(D, 0);
        for (int d = 0; d < D; ++d) sigma_inv_[sig_fwd[d]] = d;
        sig_bwd = sigma_inv_.data();
    }

    label_.assign(D, -1);
    order_.assign(D, -1);
    best_.clear();
    candidate_.assign(body_len, '\0');
    int count = 0;

    const int sense_count = reflect ? 2 : 1;
    for (int sense = 0; sense < sense_count; ++sense) {
        const int* sig = sense == 0 ? sig_fwd : sig_bwd;
        for (int d0 = 0; d0 < D; ++d0) {
            int state = best_.empty() ? -1 : 0;   // -1 smaller, 0 tied, +1 dominated
            std::fill(label_.begin(), label_.end(), -1);
            label_[d0] = 0;
            order_[0] = d0;
            int next = 1;
            size_t pos = 0;

            auto put = [&](int val) {
                if (w == 1) {
                    candidate_[pos] = static_cast<char>(val);
                    if (state == 0) {
                        auto c = static_cast<unsigned char>(candidate_[pos]);
                        auto b = static_cast<unsigned char>(best_[pos]);
                        if (c != b) state = c < b ? -1 : 1;
                    }
                    ++pos;
                } else {
                    candidate_[pos] = static_cast<char>((val >> 8) & 0xff);
                    candidate_[pos + 1] = static_cast<char>(val & 0xff);
                    if (state == 0) {
                        for (size_t p = pos; p < pos + 2 && state == 0; ++p) {
                            auto c = static_cast<unsigned char>(candidate_[p]);
                            auto b = static_cast<unsigned char>(best_[p]);
                            if (c != b) state = c < b ? -1 : 1;
                        }
                    }
                    pos += 2;
                }
            };

            for (int i = 0; i < D && state <= 0; ++i) {
                int d = order_[i];
                for (int tgt : {sig[d], d ^ 1}) {
                    int lab = label_[tgt];
                    if (lab < 0) {
                        lab = next++;
                        label_[tgt] = lab;
                        order_[lab] = tgt;
                    }
                    put(lab);
                }
                if (marked_edge >= 0) put((d >> 1) == marked_edge ? 1 : 0);
            }

            if (state == 1) continue;
            if (state == -1) {
                best_ = candidate_;
                best_start_ = d0;
                best_mirrored_ = sense == 1;
                count = 1;
            } else {
                ++count;
            }
        }
    }

    if (aut_out) *aut_out = count;
    std::string out;
    out.reserve(2 + body_len);
    append_u16(out, D);
    out += best_;
    return out;
}

std::string Canonicalizer::code(const PlaneMap& m, bool reflect) {
    return run(m, reflect, -1, nullptr);
}

CanonicalLabeling Canonicalizer::labeling(const PlaneMap& m, bool reflect) {
    run(m, reflect, -1, nullptr);
    const int D = m.dart_count();
    CanonicalLabeling out;
    out.mirrored = best_mirrored_;
    out.order.assign(D, -1);
    if (D == 0) return out;

    label_.assign(D, -1);
    label_[best_start_] = 0;
    out.order[0] = best_start_;
    int next = 1;
    for (int i = 0; i < D; ++i) {
        int d = out.order[i];
        int fwd = best_mirrored_ ? m.sigma_inv(d) : m.sigma(d);
        for (int tgt : {fwd, d ^ 1}) {
            if (label_[tgt] < 0) {
                label_[tgt] = next;
                out.order[next] = tgt;
                ++next;
            }
        }
    }
    return out;
}

std::string Canonicalizer::code_marked_edge(const PlaneMap& m, int marked_edge, bool reflect) {
    return run(m, reflect, marked_edge, nullptr);
}

int Canonicalizer::automorphism_count(const PlaneMap& m, bool reflect) {
    int count = 0;
    run(m, reflect, -1, &count);
    return count;
}

CanonicalCode canonical_code(const PlaneMap& m, bool reflect) {
    Canonicalizer c;
    return CanonicalCode{c.code(m, reflect), reflect};
}

bool is_isomorphic(const PlaneMap& a, const PlaneMap& b, bool reflect) {
    if (a.dart_count() != b.dart_count() || a.vertex_count() != b.vertex_count())
        return false;
    Canonicalizer c;
    return c.code(a, reflect) == c.code(b, reflect);
}

int automorphism_count(const PlaneMap& m, bool reflect) {
    Canonicalizer c;
    return c.automorphism_count(m, reflect);
}

PlaneMap map_from_code(const std::string& bytes) {
    if (bytes.size() < 2) throw MapError(MapErrc::truncated_record, "code too short");
    const int D = (static_cast<unsigned char>(bytes[0]) << 8) |
                  static_cast<unsigned char>(bytes[1]);
    if (D == 0) return PlaneMap::single_vertex();
    const int w = D <= 255 ? 1 : 2;
    if (bytes.size() != 2 + static_cast<size_t>(D) * 2 * w)
        throw MapError(MapErrc::truncated_record, "code length mismatch");

    auto read = [&](size_t entry) -> int {
        size_t p = 2 + entry * w;
        if (w == 1) return static_cast<unsigned char>(bytes[p]);
        return (static_cast<unsigned char>(bytes[p]) << 8) |
               static_cast<unsigned char>(bytes[p + 1]);
    };

    std::vector<int> sigma(D), mate(D);
    for (int i = 0; i < D; ++i) {
        sigma[i] = read(2 * i);
        mate[i] = read(2 * i + 1);
        if (sigma[i] >= D || mate[i] >= D)
            throw MapError(MapErrc::truncated_record, "dart id out of range in code");
    }

    // Vertices are the sigma orbits, ordered by smallest dart.
    std::vector<std::vector<int>> rotations;
    std::vector<char> placed(D, 0);
    for (int d = 0; d < D; ++d) {
        if (placed[d]) continue;
        std::vector<int> rot;
        int cur = d;
        do {
            placed[cur] = 1;
            rot.push_back(cur);
            cur = sigma[cur];
            if (cur < 0 || cur >= D || (placed[cur] && cur != d))
                throw MapError(MapErrc::truncated_record, "sigma in code is not a permutation");
        } while (cur != d);
        rotations.push_back(std::move(rot));
    }
    return assemble_map(static_cast<int>(rotations.size()), rotations, mate, false);
}

std::string code_to_hex(const std::string& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xf]);
    }
    return out;
}

} // namespace muq
