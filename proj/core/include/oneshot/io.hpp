#pragma once

#include <string>

#include "oneshot/bounds.hpp"
#include "oneshot/channel.hpp"
#include "oneshot/game.hpp"
#include "oneshot/kssets.hpp"
#include "oneshot/strategy.hpp"

namespace oneshot {

// JSON codecs for the on-disk formats. Exact rationals travel as "num/den"
// strings, never floats; box tables are doubles.

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

Hypergraph hypergraph_from_json(const std::string& text);
std::string hypergraph_to_json(const Hypergraph& h);

// {"inputs":..,"outputs":..,"probs":{x:{y:"num/den"}}} or
// {"hypergraph":{...},"output_uniform":true[,"outputs":[...]]}.
ClassicalChannel channel_from_json(const std::string& text);
std::string channel_to_json(const ClassicalChannel& n);

// {"m0":["x1","x2"],...} in file order.
Encoding encoding_from_json(const std::string& text);
std::string encoding_to_json(const Encoding& e);

// {"probs":{message:"num/den"}} resolved against the encoding's order.
MessageEnsemble ensemble_from_json(const std::string& text, const Encoding& e);
std::string ensemble_to_json(const MessageEnsemble& p, const Encoding& e);

CorrelationBox box_from_json(const std::string& text);
std::string box_to_json(const CorrelationBox& box);

// {"dim":d,"rays":{id:[int or "num/den", ...]}}; labels ordered numerically
// when possible, lexicographically otherwise.
VectorSet rayset_from_json(const std::string& text);
std::string rayset_to_json(const VectorSet& v);

std::string game_to_json(const GameSpec& g);
GameSpec game_from_json(const std::string& text);

std::string classical_bound_to_json(const ClassicalBound& b,
                                    const std::vector<std::string>& messages,
                                    const std::vector<std::string>& outputs);
std::string beta_bound_to_json(const BetaBound& b, const Encoding& e,
                               const std::vector<std::string>& vertices);
std::string cig_bound_to_json(const CigBound& b, const Encoding& e,
                              const std::vector<std::string>& inputs);

}  // namespace oneshot
