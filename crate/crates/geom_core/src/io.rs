//! JSON formats: `{"points": [[x,y],...]}` and `{"shape": {"vertices": [[x,y],...]}}`.

use crate::error::{GeomError, Result};
use crate::point::PointSet;
use crate::shape::ConvexShape;
use crate::vec2::Vec2;
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize)]
struct PointsDoc {
    points: Vec<[f64; 2]>,
}

#[derive(Serialize, Deserialize)]
struct VerticesDoc {
    vertices: Vec<[f64; 2]>,
}

#[derive(Serialize, Deserialize)]
struct ShapeDoc {
    shape: VerticesDoc,
}

fn json_err(e: serde_json::Error) -> GeomError {
    GeomError::Json(e.to_string())
}

pub fn points_to_json(p: &PointSet) -> String {
    let doc = PointsDoc { points: p.points().iter().map(|q| [q.x, q.y]).collect() };
    serde_json::to_string(&doc).expect("points serialise")
}

pub fn points_from_json(s: &str) -> Result<PointSet> {
    let doc: PointsDoc = serde_json::from_str(s).map_err(json_err)?;
    let v: Vec<Vec2> = doc.points.iter().map(|a| Vec2::new(a[0], a[1])).collect();
    PointSet::new(&v)
}

pub fn shape_to_json(c: &ConvexShape) -> String {
    let doc = ShapeDoc {
        shape: VerticesDoc { vertices: c.vertices().iter().map(|v| [v.x, v.y]).collect() },
    };
    serde_json::to_string(&doc).expect("shape serialises")
}

pub fn shape_from_json(s: &str) -> Result<ConvexShape> {
    let doc: ShapeDoc = serde_json::from_str(s).map_err(json_err)?;
    let v: Vec<Vec2> = doc.shape.vertices.iter().map(|a| Vec2::new(a[0], a[1])).collect();
    ConvexShape::new(&v)
}
