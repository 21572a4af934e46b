#pragma once

#include <string>

#include "nsym/graph.hpp"
#include "nsym/indeterminacy.hpp"
#include "nsym/literal.hpp"

namespace nsym::io {

/// Plain-text table files. The first non-comment line names the payload:
///   subind r=<r>          then r^2 lines "I<j> I<k> -> I<m>"
///   littable <op>         then 9 lines "X Y -> Z" (3 lines "X -> Z" for neg)
///   adjacency n=<n> directed|undirected   then n rows of 0 1 -1 I entries
/// Order files hold a single chain like "T1>T2>T3>I>F1>F2".
/// '#' starts a comment anywhere; save/load round-trips are bit-exact on
/// canonical text.
enum class FileKind { subind, littable, adjacency, order };

FileKind sniff(const std::string& text);

std::string save(const ind::SubIndTable& t);
ind::SubIndTable load_subind(const std::string& text);

std::string save(const lit::Table& t);
lit::Table load_littable(const std::string& text);

std::string save(const graph::Adjacency& m);
graph::Adjacency load_adjacency(const std::string& text);

std::string save_order(const lit::PrevOrder& o);
lit::PrevOrder load_order(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace nsym::io
