#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "agu/geometry.hpp"
#include "agu/interval_cover.hpp"
#include "agu/polygon_clustering.hpp"
#include "agu/segment_clustering.hpp"

namespace agu::io {

using json = nlohmann::json;

// geometry documents: segment {"a":[x,y],"b":[x,y]}, polygon {"ring":[[x,y],...]}
json to_json(const Point2D& p);
json to_json(const Segment2D& s);
json to_json(const Polygon2D& poly);
Point2D point_from_json(const json& j);
Segment2D segment_from_json(const json& j);
Polygon2D polygon_from_json(const json& j);

// instance files
std::vector<Segment2D> segments_from_json(const json& j);   // {"segments":[...]}
std::vector<Polygon2D> polygons_from_json(const json& j);   // {"polygons":[...]}
json segments_to_json(const std::vector<Segment2D>& segments);
json polygons_to_json(const std::vector<Polygon2D>& polygons);

// multi-interval set cover: {"sets":[[[lo,hi],...],...]}
MultiIntervalInstance instance_from_json(const json& j);
json instance_to_json(const MultiIntervalInstance& inst);

// {"chosen":[i,...],"atoms":n,"greedy_bound":x}
json cover_solution_to_json(const CoverSolution& sol, std::size_t atom_count);

// {"centers":[i..],"radius":x,"mode":"max","frontier":[[r,size]..]}
json segment_clustering_to_json(const SegmentClustering& result, bool with_frontier);

// {"centers":[[x,y]..],"radius":x,"samples":m,"alpha_bound":x}
json point_clustering_to_json(const PointClustering& result);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace agu::io
